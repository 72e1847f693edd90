"""weatherlens: weather regions, forecast verification, and map glyph geometry.

The estimator classes (ZScoreScaler, WardClustering, ForestRegressor,
AlbersEqualArea) follow the fit/transform/predict + get_params protocol so
they compose with scikit-learn style tooling; the stage functions mirror
the CLI subcommands.
"""

from .exceptions import (
    BundleError,
    ConfigurationError,
    DesignError,
    NotFittedError,
    ParseError,
    ProjectionDomainError,
    StageError,
    UndefinedSkillError,
    UndefinedStatisticError,
    WeatherLensError,
)
from .glyphs import AlbersEqualArea, UsProjection, ellipse_polygon, ellipse_radius, seasonal_glyph
from .importance import ForestRegressor, permutation_importance, rescale_importance
from .ingest import (
    dedupe_forecasts,
    detect_precip_event,
    distance_to_coast,
    filter_lags,
    fuse_wind,
    haversine_miles,
)
from .regions import WardClustering, ZScoreScaler, aggregate_profiles, standardize
from .service import PipelineConfig, pipeline_run
from .verification import (
    PrecipSeries,
    brier_skill_score,
    spearman_pvalue,
    spearman_rho,
    temp_abs_error,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # estimators
    "ZScoreScaler",
    "WardClustering",
    "ForestRegressor",
    "AlbersEqualArea",
    "UsProjection",
    # ingest operations
    "fuse_wind",
    "dedupe_forecasts",
    "filter_lags",
    "detect_precip_event",
    "distance_to_coast",
    "haversine_miles",
    # regions
    "aggregate_profiles",
    "standardize",
    # verification
    "PrecipSeries",
    "brier_skill_score",
    "temp_abs_error",
    "spearman_rho",
    "spearman_pvalue",
    # importance
    "permutation_importance",
    "rescale_importance",
    # glyphs
    "seasonal_glyph",
    "ellipse_radius",
    "ellipse_polygon",
    # service
    "PipelineConfig",
    "pipeline_run",
    # exceptions
    "WeatherLensError",
    "ParseError",
    "ConfigurationError",
    "UndefinedStatisticError",
    "UndefinedSkillError",
    "DesignError",
    "ProjectionDomainError",
    "BundleError",
    "StageError",
    "NotFittedError",
]
