"""Variable registry (validity ranges) and source-table layouts.

Every measured variable carries the validity range used by the cleaning
stage; a value outside its range is dropped (set absent), never clamped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..exceptions import ConfigurationError


@dataclass(frozen=True)
class VariableRange:
    name: str
    unit: str
    lo: float
    hi: float
    lo_open: bool = False
    hi_open: bool = False
    integer: bool = False

    def contains(self, value: float) -> bool:
        if self.integer and float(value) != int(value):
            return False
        if value < self.lo or (self.lo_open and value == self.lo):
            return False
        if value > self.hi or (self.hi_open and value == self.hi):
            return False
        return True


# Daily measurement variables, in canonical column order.
MEASUREMENT_VARIABLES: tuple[VariableRange, ...] = (
    VariableRange("min_temp", "degF", -37.0, 127.0),
    VariableRange("max_temp", "degF", -37.0, 127.0),
    VariableRange("precipitation", "in", 0.0, 12.95),
    VariableRange("min_dew", "degF", -50.0, 90.0),
    VariableRange("max_dew", "degF", -50.0, 90.0),
    VariableRange("min_humidity", "pct", 0.0, 100.0, lo_open=True),
    VariableRange("max_humidity", "pct", 0.0, 100.0, lo_open=True),
    VariableRange("min_slp", "inHg", 28.2, 31.2),
    VariableRange("max_slp", "inHg", 28.2, 31.2),
    VariableRange("mean_wind", "mph", 0.0, 70.0),
    VariableRange("max_wind", "mph", 0.0, 70.0),
    VariableRange("min_visibility", "mi", 0.0, 10.0),
    VariableRange("cloud_cover", "okta", 0.0, 8.0, integer=True),
)

# Raw wind inputs share the wind range; they are fused into max_wind after
# range filtering (the lower of the two survives).
RAW_WIND_FIELDS = ("max_wind_speed", "max_gust")

STATION_RANGES = {
    "elevation": VariableRange("elevation", "ft", 3.0, 7422.0),
    "distance_to_coast": VariableRange("distance_to_coast", "mi", 0.0, 807.0),
}

MEASUREMENT_FIELDS = tuple(v.name for v in MEASUREMENT_VARIABLES)

RANGES_BY_FIELD = {v.name: v for v in MEASUREMENT_VARIABLES}
RANGES_BY_FIELD["max_wind_speed"] = VariableRange("max_wind_speed", "mph", 0.0, 70.0)
RANGES_BY_FIELD["max_gust"] = VariableRange("max_gust", "mph", 0.0, 70.0)

#: field names a patch row may target
PATCHABLE_FIELDS = MEASUREMENT_FIELDS + RAW_WIND_FIELDS

MISSING_TOKENS = frozenset({"", "na", "n/a", "nan", "null", "none", "-", "t", "m"})

FORECAST_VARIABLES = ("fmin_temp", "fmax_temp", "precip_prob")

MAX_LAG = 5


@dataclass
class TableSchema:
    """Maps canonical field names to source column names for one table."""

    columns: dict[str, str]
    delimiter: str = ","
    has_header: bool = True
    date_formats: tuple[str, ...] = ("%Y-%m-%d",)

    def source_column(self, field_name: str) -> str:
        return self.columns[field_name]


@dataclass
class ForecastSchema(TableSchema):
    """Layout of the long-format forecast table.

    The table has one row per (station, target date, issue date, variable).
    ``variable_names`` maps each canonical forecast field to the token(s)
    that identify it in the variable column; ``prob_unit`` says whether the
    precipitation probability is recorded in percent or as a fraction.
    """

    variable_names: dict[str, tuple[str, ...]] = field(
        default_factory=lambda: {
            "fmin_temp": ("min_temp",),
            "fmax_temp": ("max_temp",),
            "precip_prob": ("precip_prob",),
        }
    )
    prob_unit: str = "fraction"  # "fraction" | "percent"
    station_key: str = "id"  # "id" | "row_index" (1-based row in locations)


@dataclass
class InputSchemas:
    locations: TableSchema
    measurements: TableSchema
    forecasts: ForecastSchema


def canonical_schemas() -> InputSchemas:
    """Snake-case CSV layout; the layout written by this package's own tools."""
    return InputSchemas(
        locations=TableSchema(
            columns={
                "station_id": "station_id",
                "name": "name",
                "longitude": "longitude",
                "latitude": "latitude",
                "elevation": "elevation",
            }
        ),
        measurements=TableSchema(
            columns={
                "station_id": "station_id",
                "date": "date",
                "events": "events",
                "max_wind_speed": "max_wind_speed",
                "max_gust": "max_gust",
                **{f: f for f in MEASUREMENT_FIELDS if f != "max_wind"},
            }
        ),
        forecasts=ForecastSchema(
            columns={
                "station_id": "station_id",
                "target_date": "target_date",
                "issue_date": "issue_date",
                "variable": "variable",
                "value": "value",
            },
            variable_names={
                "fmin_temp": ("min_temp", "MinTemp"),
                "fmax_temp": ("max_temp", "MaxTemp"),
                "precip_prob": ("precip_prob", "ProbPrecip"),
            },
            prob_unit="fraction",
        ),
    )


def dataexpo_schemas() -> InputSchemas:
    """Layout of the 2018 Data Expo distribution (Weather-Underground style)."""
    return InputSchemas(
        locations=TableSchema(
            columns={
                "station_id": "AirPtCd",
                "name": "city",
                "longitude": "longitude",
                "latitude": "latitude",
                "elevation": "elevation",
            }
        ),
        measurements=TableSchema(
            columns={
                "station_id": "AirPtCd",
                "date": "Date",
                "min_temp": "Min_TemperatureF",
                "max_temp": "Max_TemperatureF",
                "precipitation": "PrecipitationIn",
                "min_dew": "Min_DewpointF",
                "max_dew": "Max_Dew_PointF",
                "min_humidity": "Min_Humidity",
                "max_humidity": "Max_Humidity",
                "min_slp": "Min_Sea_Level_PressureIn",
                "max_slp": "Max_Sea_Level_PressureIn",
                "mean_wind": "Mean_Wind_SpeedMPH",
                "max_wind_speed": "Max_Wind_SpeedMPH",
                "max_gust": "Max_Gust_SpeedMPH",
                "min_visibility": "Min_VisibilityMiles",
                "cloud_cover": "CloudCover",
                "events": "Events",
            },
            date_formats=("%Y-%m-%d", "%m/%d/%Y", "%Y/%m/%d"),
        ),
        forecasts=ForecastSchema(
            columns={
                "station_id": "station",
                "target_date": "target_date",
                "issue_date": "issue_date",
                "variable": "variable",
                "value": "value",
            },
            delimiter=" ",
            has_header=False,
            # headerless: positional order of the Data Expo forecast file
            variable_names={
                "fmin_temp": ("MinTemp",),
                "fmax_temp": ("MaxTemp",),
                "precip_prob": ("ProbPrecip", "PrecipProb"),
            },
            prob_unit="percent",
            station_key="row_index",
            date_formats=("%Y-%m-%d", "%m/%d/%Y"),
        ),
    )


_REGISTRY = {
    "canonical": canonical_schemas,
    "dataexpo2018": dataexpo_schemas,
}

#: positional column order used when a forecast table has no header
FORECAST_POSITIONAL_ORDER = ("station_id", "target_date", "value", "variable", "issue_date")


def load_schemas(name_or_path: str | None) -> InputSchemas:
    """Resolve a schema registry name or a JSON override file."""
    if name_or_path is None:
        return canonical_schemas()
    if name_or_path in _REGISTRY:
        return _REGISTRY[name_or_path]()
    path = Path(name_or_path)
    if not path.exists():
        raise ConfigurationError(
            f"unknown schema {name_or_path!r}: not a registry name "
            f"({sorted(_REGISTRY)}) and no such file"
        )
    raw = json.loads(path.read_text())
    base = canonical_schemas()
    for table in ("locations", "measurements", "forecasts"):
        if table not in raw:
            continue
        spec = raw[table]
        target = getattr(base, table)
        for key in ("delimiter", "has_header", "prob_unit", "station_key"):
            if key in spec and hasattr(target, key):
                setattr(target, key, spec[key])
        if "date_formats" in spec:
            target.date_formats = tuple(spec["date_formats"])
        if "columns" in spec:
            target.columns.update(spec["columns"])
        if "variable_names" in spec and hasattr(target, "variable_names"):
            target.variable_names = {k: tuple(v) for k, v in spec["variable_names"].items()}
    return base
