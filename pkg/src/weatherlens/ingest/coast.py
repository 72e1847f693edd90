"""Great-circle distances and nearest-shoreline computation."""

from __future__ import annotations

import numpy as np

from ..exceptions import ConfigurationError

EARTH_RADIUS_MILES = 3958.8


def haversine_miles(lon1, lat1, lon2, lat2) -> np.ndarray | float:
    """Great-circle distance in miles between lon/lat points (degrees).

    Accepts scalars or broadcastable arrays.
    """
    lon1, lat1, lon2, lat2 = (np.radians(np.asarray(v, dtype=float)) for v in (lon1, lat1, lon2, lat2))
    dlat = lat2 - lat1
    dlon = lon2 - lon1
    h = np.sin(dlat / 2.0) ** 2 + np.cos(lat1) * np.cos(lat2) * np.sin(dlon / 2.0) ** 2
    d = 2.0 * EARTH_RADIUS_MILES * np.arcsin(np.sqrt(np.clip(h, 0.0, 1.0)))
    return float(d) if d.ndim == 0 else d


def distance_to_coast(longitude: float, latitude: float, shoreline: np.ndarray) -> float:
    """Distance in miles from a point to the nearest shoreline vertex."""
    shoreline = np.asarray(shoreline, dtype=float)
    if shoreline.size == 0:
        raise ConfigurationError("shoreline vertex list is empty")
    d = haversine_miles(longitude, latitude, shoreline[:, 0], shoreline[:, 1])
    return float(np.min(d))
