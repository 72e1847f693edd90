"""Importance stage: per-region forests, permutation importance, rescaling."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from ..tableio import read_csv_dicts, write_csv
from .design import PREDICTORS, DesignMatrix, build_design_matrix
from .forest import ForestRegressor, Tree
from .permutation import permutation_importance, rescale_importance

__all__ = [
    "ForestRegressor",
    "Tree",
    "permutation_importance",
    "rescale_importance",
    "build_design_matrix",
    "DesignMatrix",
    "PREDICTORS",
    "run_importance",
    "compute_importance_table",
    "load_importance",
]

IMPORTANCE_HEADER = ("region", "error_variable", "predictor", "raw", "rescaled")


def compute_importance_table(
    cells,
    profiles: dict[str, np.ndarray],
    assignment: dict[str, int],
    region_names: dict[int, str],
    n_trees: int = 500,
    seed: int = 0,
    error_variables: tuple[str, ...] | None = None,
) -> list[tuple[str, str, str, float, float]]:
    """Importance rows (region, error variable, predictor, raw, rescaled).

    One forest per (region, error variable); the rescaling is applied within
    each such pair so every pair's most informative predictor scores 100.
    """
    from ..verification.cells import ERROR_VARIABLES

    error_variables = error_variables or ERROR_VARIABLES
    rows: list[tuple[str, str, str, float, float]] = []
    for label in sorted(region_names):
        for var in error_variables:
            design = build_design_matrix(
                cells, profiles, assignment, label, region_names[label], var
            )
            forest = ForestRegressor(n_trees=n_trees, seed=seed).fit(design.X, design.y)
            raw = permutation_importance(forest, design.X, design.y)
            rescaled = rescale_importance(raw)
            for name, r, s in zip(design.predictor_names, raw, rescaled):
                rows.append((design.region, var, name, float(r), float(s)))
    return rows


def run_importance(
    errors_dir: str | Path,
    profiles_path: str | Path,
    assignments_path: str | Path,
    out_dir: str | Path,
    n_trees: int = 500,
    seed: int = 0,
) -> None:
    """Compute the full importance table from on-disk stage outputs."""
    from ..regions import load_assignments, load_profiles
    from ..regions.scaler import ZScoreScaler
    from ..verification import load_error_cells

    station_ids, X = load_profiles(profiles_path)
    # impute + standardize so no absent predictor cells reach the forests
    Z = ZScoreScaler().fit_transform(X)
    profiles = {sid: Z[i] for i, sid in enumerate(station_ids)}
    assignment, region_names = load_assignments(assignments_path)
    cells = load_error_cells(Path(errors_dir) / "error_cells.csv")
    rows = compute_importance_table(
        cells, profiles, assignment, region_names, n_trees=n_trees, seed=seed
    )
    write_csv(Path(out_dir) / "importance.csv", IMPORTANCE_HEADER, rows)


def load_importance(path: str | Path) -> list[dict]:
    out = []
    for row in read_csv_dicts(path):
        out.append(
            {
                "region": row["region"],
                "error_variable": row["error_variable"],
                "predictor": row["predictor"],
                "raw": float(row["raw"]),
                "rescaled": float(row["rescaled"]),
            }
        )
    return out
