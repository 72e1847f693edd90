"""Ingest stage: parse raw tables, clean them, and emit canonical records."""

from __future__ import annotations

import datetime as dt
import logging
from pathlib import Path

from ..exceptions import ConfigurationError
from ..tableio import opt_float, read_csv_dicts, write_csv
from .clean import (
    apply_patches,
    apply_range_filters,
    clean_forecasts,
    clean_measurements,
    dedupe_forecasts,
    detect_precip_event,
    filter_lags,
    fuse_wind,
    fuse_wind_records,
)
from .coast import distance_to_coast, haversine_miles
from .parse import read_forecasts, read_locations, read_measurements, read_patches, read_shoreline
from .records import DailyRecord, ForecastRecord, Patch, PatchSet, StationMeta
from .report import CleaningReport
from .schema import (
    MEASUREMENT_FIELDS,
    STATION_RANGES,
    InputSchemas,
    load_schemas,
)

__all__ = [
    "run_ingest",
    "read_locations",
    "read_measurements",
    "read_forecasts",
    "read_shoreline",
    "read_patches",
    "apply_range_filters",
    "apply_patches",
    "fuse_wind",
    "fuse_wind_records",
    "dedupe_forecasts",
    "filter_lags",
    "detect_precip_event",
    "distance_to_coast",
    "haversine_miles",
    "clean_measurements",
    "clean_forecasts",
    "CleaningReport",
    "StationMeta",
    "DailyRecord",
    "ForecastRecord",
    "Patch",
    "PatchSet",
    "load_clean_stations",
    "load_clean_measurements",
    "load_clean_forecasts",
]

log = logging.getLogger(__name__)

STATION_HEADER = ("station_id", "name", "longitude", "latitude", "elevation", "distance_to_coast")
MEASUREMENT_HEADER = ("station_id", "date") + MEASUREMENT_FIELDS + ("events", "precip_event")
FORECAST_HEADER = ("station_id", "target_date", "lag", "fmin_temp", "fmax_temp", "precip_prob")


def run_ingest(
    locations: str | Path,
    measurements: str | Path,
    forecasts: str | Path,
    shoreline: str | Path,
    patches: str | Path,
    out_dir: str | Path,
    schemas: InputSchemas | str | None = None,
) -> CleaningReport:
    """Run the full ingest stage and write the cleaned tables under ``out_dir``."""
    if not isinstance(schemas, InputSchemas):
        schemas = load_schemas(schemas)
    for label, p in (
        ("locations", locations),
        ("measurements", measurements),
        ("forecasts", forecasts),
        ("shoreline", shoreline),
        ("patches", patches),
    ):
        if not Path(p).exists():
            raise ConfigurationError(f"missing {label} file: {p}")

    report = CleaningReport()
    stations = read_locations(locations, schemas.locations)
    verts = read_shoreline(shoreline)
    for meta in stations:
        meta.distance_to_coast = distance_to_coast(meta.longitude, meta.latitude, verts)
        if not STATION_RANGES["distance_to_coast"].contains(meta.distance_to_coast):
            report.station_notes.append(
                f"{meta.station_id}: distance_to_coast {meta.distance_to_coast:.1f} mi "
                "outside the expected range"
            )

    patch_set = read_patches(patches)
    known = {m.station_id for m in stations}
    daily = read_measurements(measurements, schemas.measurements, report)
    unknown = sorted({r.station_id for r in daily} - known)
    if unknown:
        report.warn(f"measurements reference unknown stations: {unknown[:5]}")
        daily = [r for r in daily if r.station_id in known]
    daily = clean_measurements(daily, patch_set, report)

    fc = read_forecasts(forecasts, schemas.forecasts, stations, report)
    fc = [r for r in fc if r.station_id in known]
    fc = clean_forecasts(fc, report)

    out_dir = Path(out_dir)
    write_clean_tables(out_dir, stations, daily, fc)
    report.write(out_dir / "cleaning_report.json")
    return report


def write_clean_tables(
    out_dir: Path,
    stations: list[StationMeta],
    daily: list[DailyRecord],
    forecasts: list[ForecastRecord],
) -> None:
    write_csv(
        out_dir / "stations.csv",
        STATION_HEADER,
        (
            (m.station_id, m.name, m.longitude, m.latitude, m.elevation, m.distance_to_coast)
            for m in sorted(stations, key=lambda m: m.station_id)
        ),
    )
    write_csv(
        out_dir / "measurements.csv",
        MEASUREMENT_HEADER,
        (
            (r.station_id, r.date.isoformat())
            + tuple(r.get(f) for f in MEASUREMENT_FIELDS)
            + (r.events, int(detect_precip_event(r)))
            for r in daily
        ),
    )
    write_csv(
        out_dir / "forecasts.csv",
        FORECAST_HEADER,
        (
            (r.station_id, r.target_date.isoformat(), r.lag, r.fmin_temp, r.fmax_temp, r.precip_prob)
            for r in forecasts
        ),
    )


def load_clean_stations(path: str | Path) -> list[StationMeta]:
    out = []
    for row in read_csv_dicts(path):
        out.append(
            StationMeta(
                station_id=row["station_id"],
                name=row["name"],
                longitude=float(row["longitude"]),
                latitude=float(row["latitude"]),
                elevation=float(row["elevation"]),
                distance_to_coast=opt_float(row["distance_to_coast"]),
            )
        )
    return out


def load_clean_measurements(path: str | Path) -> list[DailyRecord]:
    out = []
    for row in read_csv_dicts(path):
        rec = DailyRecord(
            station_id=row["station_id"],
            date=dt.date.fromisoformat(row["date"]),
            events=row.get("events", ""),
        )
        for f in MEASUREMENT_FIELDS:
            rec.set(f, opt_float(row[f]))
        out.append(rec)
    return out


def load_clean_forecasts(path: str | Path) -> list[ForecastRecord]:
    out = []
    for row in read_csv_dicts(path):
        out.append(
            ForecastRecord(
                station_id=row["station_id"],
                target_date=dt.date.fromisoformat(row["target_date"]),
                lag=int(row["lag"]),
                fmin_temp=opt_float(row["fmin_temp"]),
                fmax_temp=opt_float(row["fmax_temp"]),
                precip_prob=opt_float(row["precip_prob"]),
            )
        )
    return out
