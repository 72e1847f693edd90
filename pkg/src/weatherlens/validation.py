"""Input-validation helpers used by the estimators and geometry code."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .exceptions import NotFittedError


def check_array(
    X,
    *,
    name: str = "X",
    ndim: int = 2,
    dtype=float,
    allow_nan: bool = False,
    min_rows: int = 1,
) -> np.ndarray:
    """Coerce ``X`` to a numpy array and validate shape and finiteness."""
    arr = np.asarray(X, dtype=dtype)
    if arr.ndim != ndim:
        raise ValueError(f"{name} must be {ndim}-dimensional, got shape {arr.shape}")
    if arr.shape[0] < min_rows:
        raise ValueError(f"{name} needs at least {min_rows} rows, got {arr.shape[0]}")
    if not allow_nan and arr.dtype.kind == "f" and not np.all(np.isfinite(arr)):
        bad = np.argwhere(~np.isfinite(arr))[0]
        raise ValueError(f"{name} contains a non-finite value at index {tuple(bad)}")
    return arr


def check_vector(x, *, name: str = "x", min_len: int = 1, allow_nan: bool = False) -> np.ndarray:
    return check_array(x, name=name, ndim=1, min_rows=min_len, allow_nan=allow_nan)


def check_same_length(x: np.ndarray, y: np.ndarray, *, names: tuple[str, str] = ("x", "y")) -> None:
    if len(x) != len(y):
        raise ValueError(f"{names[0]} and {names[1]} must have equal length: {len(x)} != {len(y)}")


def check_square_distances(D, *, name: str = "distances") -> np.ndarray:
    """Validate a symmetric, zero-diagonal, non-negative distance matrix."""
    arr = check_array(D, name=name, ndim=2)
    n, m = arr.shape
    if n != m:
        raise ValueError(f"{name} must be square, got {arr.shape}")
    if not np.allclose(arr, arr.T, atol=1e-10):
        raise ValueError(f"{name} must be symmetric")
    if np.any(np.diag(arr) != 0.0):
        raise ValueError(f"{name} must have a zero diagonal")
    if np.any(arr < 0):
        raise ValueError(f"{name} must be non-negative")
    return arr


def check_is_fitted(estimator, attributes: Sequence[str] | str) -> None:
    if isinstance(attributes, str):
        attributes = [attributes]
    missing = [a for a in attributes if getattr(estimator, a, None) is None]
    if missing:
        raise NotFittedError(
            f"{type(estimator).__name__} is not fitted yet; call fit() before using "
            f"{missing[0]!r}"
        )


def spawned_rng(seed: int, *key: int) -> np.random.Generator:
    """Deterministic, platform-stable RNG stream derived from (seed, key)."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=key)))
