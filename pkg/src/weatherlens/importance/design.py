"""Design matrices for the per-region error-variable forests."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..exceptions import DesignError
from ..regions.profiles import PROFILE_FEATURES
from ..verification.cells import ERROR_VARIABLES, LAGS, ErrorCell

#: predictor order: the profile features followed by the forecast lag
PREDICTORS: tuple[str, ...] = tuple(PROFILE_FEATURES) + ("lag",)


@dataclass
class DesignMatrix:
    region: str
    error_variable: str
    X: np.ndarray
    y: np.ndarray
    predictor_names: tuple[str, ...]
    rows: list[tuple[str, int, int]]  # (station_id, lag, month)


def build_design_matrix(
    cells: list[ErrorCell],
    profiles: dict[str, np.ndarray],
    assignment: dict[str, int],
    region_label: int,
    region_name: str,
    error_variable: str,
) -> DesignMatrix:
    """One row per (station in region, lag, month) cell with a defined response.

    ``profiles`` maps station_id to its feature vector in PROFILE_FEATURES
    order with absent cells already imputed (z-scored or raw, as produced by
    the regions stage).
    """
    if error_variable not in ERROR_VARIABLES:
        raise ValueError(f"unknown error variable {error_variable!r}")
    members = {s for s, lbl in assignment.items() if lbl == region_label}
    X_rows: list[np.ndarray] = []
    y_vals: list[float] = []
    rows: list[tuple[str, int, int]] = []
    for cell in cells:
        if cell.lag == "all" or cell.month == "all":
            continue
        if cell.station_id not in members:
            continue
        response = getattr(cell, error_variable)
        if response is None:
            continue
        prof = profiles.get(cell.station_id)
        if prof is None:
            continue
        X_rows.append(np.append(prof, float(cell.lag)))
        y_vals.append(float(response))
        rows.append((cell.station_id, int(cell.lag), int(cell.month)))
    if not X_rows:
        raise DesignError(f"region {region_name!r} has no usable rows for {error_variable}")
    X = np.vstack(X_rows)
    if not np.all(np.isfinite(X)):
        raise DesignError(f"region {region_name!r}: design matrix has absent predictor cells")
    return DesignMatrix(
        region=region_name,
        error_variable=error_variable,
        X=X,
        y=np.asarray(y_vals, dtype=float),
        predictor_names=PREDICTORS,
        rows=rows,
    )


def max_rows_per_region(n_stations: int) -> int:
    """Upper bound used in sanity checks: stations x lags x months."""
    return n_stations * len(LAGS) * 12
