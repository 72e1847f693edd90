"""Column-wise z-score standardization."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..base import ParamMixin
from ..validation import check_array, check_is_fitted

log = logging.getLogger(__name__)


class ZScoreScaler(ParamMixin):
    """Standardize features to sample mean 0 and sample SD 1 (ddof=1).

    Constant columns transform to all zeros. NaN cells are imputed at the
    column mean before scaling (so their z-score is exactly 0) and recorded
    in ``imputed_mask_``.
    """

    def __init__(self, ddof: int = 1):
        self.ddof = ddof
        self.mean_ = None
        self.scale_ = None
        self.constant_mask_ = None
        self.imputed_mask_ = None

    def fit(self, X) -> "ZScoreScaler":
        X = check_array(X, allow_nan=True, min_rows=2, name="X")
        self.imputed_mask_ = np.isnan(X)
        if self.imputed_mask_.all(axis=0).any():
            bad = int(np.flatnonzero(self.imputed_mask_.all(axis=0))[0])
            raise ValueError(f"column {bad} has no observed values")
        with np.errstate(invalid="ignore"):
            col_mean = np.nanmean(X, axis=0)
        X = np.where(self.imputed_mask_, col_mean, X)
        self.mean_ = X.mean(axis=0)
        self.scale_ = X.std(axis=0, ddof=self.ddof)
        self.constant_mask_ = self.scale_ == 0.0
        if self.constant_mask_.any():
            log.warning(
                "%d constant feature(s) map to all-zero z-scores", int(self.constant_mask_.sum())
            )
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, ["mean_", "scale_"])
        X = check_array(X, allow_nan=True, name="X")
        X = np.where(np.isnan(X), self.mean_, X)
        scale = np.where(self.constant_mask_, 1.0, self.scale_)
        Z = (X - self.mean_) / scale
        Z[:, self.constant_mask_] = 0.0
        return Z

    def fit_transform(self, X) -> np.ndarray:
        return self.fit(X).transform(X)

    def inverse_transform(self, Z) -> np.ndarray:
        check_is_fitted(self, ["mean_", "scale_"])
        Z = check_array(Z, name="Z")
        return Z * np.where(self.constant_mask_, 0.0, self.scale_) + self.mean_


@dataclass
class ZScoreTable:
    """Standardized station profiles plus the statistics used to build them."""

    station_ids: list[str]
    feature_names: list[str]
    values: np.ndarray
    feature_means: np.ndarray
    feature_sds: np.ndarray
    imputed: list[tuple[str, str]]
    constant_features: list[str]


def standardize(X, station_ids, feature_names) -> ZScoreTable:
    """Z-score a profile matrix column-wise; NaN cells are imputed to z=0."""
    scaler = ZScoreScaler().fit(X)
    Z = scaler.transform(X)
    imputed = [
        (station_ids[i], feature_names[j]) for i, j in np.argwhere(scaler.imputed_mask_)
    ]
    constant = [feature_names[j] for j in np.flatnonzero(scaler.constant_mask_)]
    return ZScoreTable(
        station_ids=list(station_ids),
        feature_names=list(feature_names),
        values=Z,
        feature_means=scaler.mean_.copy(),
        feature_sds=scaler.scale_.copy(),
        imputed=imputed,
        constant_features=constant,
    )
