"""Per-station climate profiles: mean and standard deviation of each variable."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..ingest.records import DailyRecord, StationMeta
from ..ingest.schema import MEASUREMENT_FIELDS


@dataclass
class StationProfile:
    station_id: str
    means: dict[str, float | None] = field(default_factory=dict)
    sds: dict[str, float | None] = field(default_factory=dict)
    elevation: float = 0.0
    distance_to_coast: float = 0.0


#: profile feature order: all means, then all SDs, then the geographic pair
PROFILE_FEATURES: tuple[str, ...] = (
    tuple(f"mean_{v}" for v in MEASUREMENT_FIELDS)
    + tuple(f"sd_{v}" for v in MEASUREMENT_FIELDS)
    + ("elevation", "distance_to_coast")
)


def _mean_sd(values: list[float]) -> tuple[float | None, float | None]:
    n = len(values)
    if n == 0:
        return None, None
    mean = math.fsum(values) / n
    if n < 2:
        return mean, None
    var = math.fsum((v - mean) ** 2 for v in values) / (n - 1)
    return mean, math.sqrt(var)


def aggregate_profiles(
    records: list[DailyRecord], stations: list[StationMeta]
) -> tuple[list[StationProfile], list[str]]:
    """Aggregate cleaned station-days into one profile per station.

    Means and sample SDs (denominator n-1) ignore absent values. A station
    with fewer than two observations of a variable gets an absent SD and a
    note; downstream standardization imputes such cells at the feature mean.
    """
    by_station: dict[str, list[DailyRecord]] = {}
    for rec in records:
        by_station.setdefault(rec.station_id, []).append(rec)

    notes: list[str] = []
    profiles: list[StationProfile] = []
    for meta in sorted(stations, key=lambda m: m.station_id):
        rows = by_station.get(meta.station_id, [])
        prof = StationProfile(
            station_id=meta.station_id,
            elevation=meta.elevation,
            distance_to_coast=meta.distance_to_coast if meta.distance_to_coast is not None else 0.0,
        )
        for var in MEASUREMENT_FIELDS:
            values = [rec.get(var) for rec in rows]
            values = [v for v in values if v is not None]
            mean, sd = _mean_sd(values)
            prof.means[var] = mean
            prof.sds[var] = sd
            if mean is None:
                notes.append(f"{meta.station_id}: no observations of {var}")
            elif sd is None:
                notes.append(f"{meta.station_id}: fewer than 2 observations of {var}; SD absent")
        profiles.append(prof)
    return profiles, notes


def profile_matrix(profiles: list[StationProfile]):
    """Profiles as a stations x features matrix with NaN for absent cells."""
    import numpy as np

    X = np.full((len(profiles), len(PROFILE_FEATURES)), np.nan)
    for i, prof in enumerate(profiles):
        col = 0
        for var in MEASUREMENT_FIELDS:
            if prof.means[var] is not None:
                X[i, col] = prof.means[var]
            col += 1
        for var in MEASUREMENT_FIELDS:
            if prof.sds[var] is not None:
                X[i, col] = prof.sds[var]
            col += 1
        X[i, col] = prof.elevation
        X[i, col + 1] = prof.distance_to_coast
    return X, list(PROFILE_FEATURES)
