"""Canonical record types produced by the ingest stage."""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass, field, fields

from ..exceptions import ConfigurationError
from .schema import MEASUREMENT_FIELDS, PATCHABLE_FIELDS, RANGES_BY_FIELD, STATION_RANGES


@dataclass
class StationMeta:
    station_id: str
    name: str
    longitude: float
    latitude: float
    elevation: float
    distance_to_coast: float | None = None

    def validate(self) -> None:
        if not -180.0 <= self.longitude <= 180.0:
            raise ConfigurationError(f"{self.station_id}: longitude {self.longitude} out of range")
        if not -90.0 <= self.latitude <= 90.0:
            raise ConfigurationError(f"{self.station_id}: latitude {self.latitude} out of range")
        if not STATION_RANGES["elevation"].contains(self.elevation):
            raise ConfigurationError(
                f"{self.station_id}: elevation {self.elevation} ft outside "
                f"[{STATION_RANGES['elevation'].lo}, {STATION_RANGES['elevation'].hi}]"
            )


@dataclass
class DailyRecord:
    """One station-day of measurements; absent values are ``None``.

    ``max_wind_speed`` and ``max_gust`` are raw inputs that exist only until
    wind fusion fills ``max_wind``; they are never serialized.
    """

    station_id: str
    date: dt.date
    min_temp: float | None = None
    max_temp: float | None = None
    precipitation: float | None = None
    min_dew: float | None = None
    max_dew: float | None = None
    min_humidity: float | None = None
    max_humidity: float | None = None
    min_slp: float | None = None
    max_slp: float | None = None
    mean_wind: float | None = None
    max_wind: float | None = None
    min_visibility: float | None = None
    cloud_cover: float | None = None
    events: str = ""
    max_wind_speed: float | None = None
    max_gust: float | None = None

    def get(self, field_name: str) -> float | None:
        return getattr(self, field_name)

    def set(self, field_name: str, value: float | None) -> None:
        setattr(self, field_name, value)


DAILY_VALUE_FIELDS = tuple(
    f.name for f in fields(DailyRecord) if f.name in RANGES_BY_FIELD
)
assert set(DAILY_VALUE_FIELDS) >= set(MEASUREMENT_FIELDS)


@dataclass
class ForecastRecord:
    """One (station, target date, lag) forecast; fields may be absent."""

    station_id: str
    target_date: dt.date
    lag: int
    fmin_temp: float | None = None
    fmax_temp: float | None = None
    precip_prob: float | None = None

    @property
    def key(self) -> tuple[str, dt.date, int]:
        return (self.station_id, self.target_date, self.lag)


PATCH_ACTIONS = ("remove", "replace", "remove_below", "remove_above", "substitute_from")


@dataclass
class Patch:
    """One declarative cleaning edit.

    action semantics:
      remove           null the cell at (station, date, variable)
      replace          set the cell to ``value``
      remove_below     null every cell of ``variable`` strictly below ``value``
                       (all dates when ``date`` is None)
      remove_above     same, strictly above
      substitute_from  fill absent cells of ``variable`` from the same-day
                       value of donor station ``value``
    """

    station_id: str
    variable: str
    action: str
    date: dt.date | None = None
    value: float | str | None = None

    def validate(self) -> None:
        if self.action not in PATCH_ACTIONS:
            raise ConfigurationError(f"unknown patch action {self.action!r}")
        if self.variable not in PATCHABLE_FIELDS:
            raise ConfigurationError(f"patch targets unknown variable {self.variable!r}")
        if self.action in ("remove", "replace") and self.date is None:
            raise ConfigurationError(f"patch action {self.action!r} requires a date")
        if self.action == "replace":
            if not isinstance(self.value, float):
                raise ConfigurationError("replace patch requires a numeric value")
            rng = RANGES_BY_FIELD[self.variable]
            if not rng.contains(self.value):
                raise ConfigurationError(
                    f"replacement {self.value} for {self.variable} violates "
                    f"range [{rng.lo}, {rng.hi}]"
                )
        if self.action in ("remove_below", "remove_above") and not isinstance(self.value, float):
            raise ConfigurationError(f"{self.action} patch requires a numeric threshold")
        if self.action == "substitute_from" and not isinstance(self.value, str):
            raise ConfigurationError("substitute_from patch requires a donor station id")


@dataclass
class PatchSet:
    patches: list[Patch] = field(default_factory=list)

    def validate(self) -> None:
        for p in self.patches:
            p.validate()

    def __iter__(self):
        return iter(self.patches)

    def __len__(self) -> int:
        return len(self.patches)
