"""Out-of-bag permutation importance and the 0-100 display rescaling."""

from __future__ import annotations

import logging

import numpy as np

from ..validation import check_array, check_is_fitted, check_vector, spawned_rng
from .forest import ForestRegressor

log = logging.getLogger(__name__)


def permutation_importance(forest: ForestRegressor, X, y) -> np.ndarray:
    """Mean over trees of the OOB squared-error increase per shuffled predictor.

    Each tree is scored on its own out-of-bag rows: the baseline mean squared
    error is compared against the error after shuffling one predictor's
    values among those rows. Trees that kept no out-of-bag rows are skipped.
    The shuffle stream is keyed by (seed, tree), independent of the streams
    used to grow the trees, so results are reproducible bit for bit.
    """
    check_is_fitted(forest, ["trees_"])
    X = check_array(X, name="X")
    y = check_vector(y, name="y")
    p = X.shape[1]
    raw = np.zeros(p)
    used = 0
    for t, (tree, oob) in enumerate(zip(forest.trees_, forest.oob_rows_)):
        if len(oob) == 0:
            continue
        used += 1
        rng = spawned_rng(forest.seed, 1, t)
        Xo = X[oob]
        yo = y[oob]
        base = tree.predict(Xo)
        base_mse = float(np.mean((base - yo) ** 2))
        for f in range(p):
            perm = rng.permutation(len(oob))
            Xp = Xo.copy()
            Xp[:, f] = Xo[perm, f]
            mse = float(np.mean((tree.predict(Xp) - yo) ** 2))
            raw[f] += mse - base_mse
    if used == 0:
        log.warning("no tree kept out-of-bag rows; importance undefined, returning zeros")
        return np.zeros(p)
    return raw / used


def rescale_importance(raw) -> np.ndarray:
    """Recenter at the minimum and rescale so the maximum lands at 100.

    A degenerate vector (all values equal) maps to all zeros with a warning.
    """
    raw = np.asarray(raw, dtype=float)
    if raw.ndim != 1 or raw.size == 0:
        raise ValueError("raw importance must be a non-empty 1-D vector")
    lo, hi = float(raw.min()), float(raw.max())
    if hi == lo:
        log.warning("all importances equal (%g); rescaled values set to 0", lo)
        return np.zeros_like(raw)
    return (raw - lo) / (hi - lo) * 100.0
