"""Readers for the raw delimited input tables.

A malformed header is fatal (the missing column is named); a malformed data
cell degrades to an absent value and is counted in the cleaning report.
"""

from __future__ import annotations

import csv
import datetime as dt
import logging
from pathlib import Path

import numpy as np

from ..exceptions import ConfigurationError, ParseError
from .records import DailyRecord, ForecastRecord, Patch, PatchSet, StationMeta
from .report import CleaningReport
from .schema import (
    FORECAST_POSITIONAL_ORDER,
    MISSING_TOKENS,
    ForecastSchema,
    TableSchema,
)

log = logging.getLogger(__name__)


def _open_rows(path: str | Path, schema: TableSchema) -> tuple[list[str] | None, list[list[str]]]:
    text = Path(path).read_text()
    if schema.delimiter == " ":
        lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    else:
        lines = [row for row in csv.reader(text.splitlines(), delimiter=schema.delimiter)]
        lines = [row for row in lines if any(cell.strip() for cell in row)]
    if not lines:
        raise ParseError(f"{path}: empty table")
    if schema.has_header:
        return lines[0], lines[1:]
    return None, lines


def _column_index(header: list[str] | None, schema: TableSchema, field_name: str, path) -> int:
    if header is None:
        try:
            return FORECAST_POSITIONAL_ORDER.index(field_name)
        except ValueError:
            raise ParseError(f"{path}: no positional slot for column '{field_name}'")
    source = schema.source_column(field_name)
    try:
        return header.index(source)
    except ValueError:
        raise ParseError(f"{path}: missing required column '{field_name}' (source '{source}')")


def _parse_float(token: str) -> float | None:
    token = token.strip()
    if token.lower() in MISSING_TOKENS:
        return None
    try:
        value = float(token)
    except ValueError:
        raise ValueError(token)
    if not np.isfinite(value):
        return None
    return value


def _parse_date(token: str, formats: tuple[str, ...]) -> dt.date:
    token = token.strip()
    for fmt in formats:
        try:
            return dt.datetime.strptime(token, fmt).date()
        except ValueError:
            continue
    raise ValueError(token)


def read_locations(path: str | Path, schema: TableSchema) -> list[StationMeta]:
    """Read the station table; invalid coordinates or elevation are fatal."""
    header, rows = _open_rows(path, schema)
    idx = {f: _column_index(header, schema, f, path) for f in schema.columns}
    stations: list[StationMeta] = []
    seen: set[str] = set()
    for row in rows:
        station_id = row[idx["station_id"]].strip()
        if station_id in seen:
            raise ConfigurationError(f"{path}: duplicate station_id {station_id!r}")
        seen.add(station_id)
        try:
            meta = StationMeta(
                station_id=station_id,
                name=row[idx["name"]].strip(),
                longitude=float(row[idx["longitude"]]),
                latitude=float(row[idx["latitude"]]),
                elevation=float(row[idx["elevation"]]),
            )
        except (ValueError, IndexError) as exc:
            raise ConfigurationError(f"{path}: unreadable location row {row!r}: {exc}")
        meta.validate()
        stations.append(meta)
    if not stations:
        raise ConfigurationError(f"{path}: no stations")
    return sorted(stations, key=lambda m: m.station_id)


def read_measurements(
    path: str | Path, schema: TableSchema, report: CleaningReport | None = None
) -> list[DailyRecord]:
    """Read per-station-day measurements into DailyRecord rows (order preserved)."""
    report = report if report is not None else CleaningReport()
    header, rows = _open_rows(path, schema)
    idx = {f: _column_index(header, schema, f, path) for f in schema.columns}
    value_fields = [f for f in schema.columns if f not in ("station_id", "date", "events")]
    records: list[DailyRecord] = []
    for row in rows:
        try:
            date = _parse_date(row[idx["date"]], schema.date_formats)
        except ValueError:
            report.parse_warnings["measurements.bad_date_row_dropped"] += 1
            continue
        rec = DailyRecord(station_id=row[idx["station_id"]].strip(), date=date)
        if "events" in idx and idx["events"] < len(row):
            rec.events = row[idx["events"]].strip()
        for f in value_fields:
            j = idx[f]
            token = row[j] if j < len(row) else ""
            try:
                rec.set(f, _parse_float(token))
            except ValueError:
                report.parse_warnings[f"measurements.unparseable.{f}"] += 1
                rec.set(f, None)
        records.append(rec)
    return records


def read_forecasts(
    path: str | Path,
    schema: ForecastSchema,
    stations: list[StationMeta] | None = None,
    report: CleaningReport | None = None,
) -> list[ForecastRecord]:
    """Read the long forecast table into sparse per-variable ForecastRecords.

    Each source row carries one forecast variable; records are merged per
    (station, target date, lag) later by dedupe_forecasts. The lag is the
    day count from issue date to target date; negative and oversize lags
    survive here and are dropped by filter_lags.
    """
    report = report if report is not None else CleaningReport()
    header, rows = _open_rows(path, schema)
    idx = {f: _column_index(header, schema, f, path) for f in schema.columns}
    token_to_field = {
        token.lower(): field_name
        for field_name, tokens in schema.variable_names.items()
        for token in tokens
    }
    by_index: dict[str, str] = {}
    if schema.station_key == "row_index":
        if stations is None:
            raise ConfigurationError("forecast schema keys stations by row index; pass stations")
        by_index = {str(i + 1): m.station_id for i, m in enumerate(stations)}
    out: list[ForecastRecord] = []
    for row in rows:
        try:
            target = _parse_date(row[idx["target_date"]], schema.date_formats)
            issued = _parse_date(row[idx["issue_date"]], schema.date_formats)
        except (ValueError, IndexError):
            report.parse_warnings["forecasts.bad_date_row_dropped"] += 1
            continue
        raw_station = row[idx["station_id"]].strip()
        station_id = by_index.get(raw_station, raw_station) if by_index else raw_station
        variable = token_to_field.get(row[idx["variable"]].strip().lower())
        if variable is None:
            report.parse_warnings["forecasts.unknown_variable"] += 1
            continue
        try:
            value = _parse_float(row[idx["value"]])
        except ValueError:
            report.parse_warnings[f"forecasts.unparseable.{variable}"] += 1
            value = None
        if value is None:
            continue
        if variable == "precip_prob":
            if schema.prob_unit == "percent":
                value /= 100.0
            if not 0.0 <= value <= 1.0:
                report.parse_warnings["forecasts.prob_out_of_range"] += 1
                continue
        rec = ForecastRecord(station_id=station_id, target_date=target, lag=(target - issued).days)
        setattr(rec, variable, value)
        out.append(rec)
    return out


def read_shoreline(path: str | Path) -> np.ndarray:
    """Read shoreline vertices as an (n, 2) lon/lat array."""
    rows = []
    with open(path, newline="") as fh:
        for row in csv.reader(fh):
            if not row or not row[0].strip():
                continue
            try:
                rows.append((float(row[0]), float(row[1])))
            except ValueError:
                continue  # header or comment line
    if not rows:
        raise ConfigurationError(f"{path}: shoreline file has no vertices")
    arr = np.asarray(rows, dtype=float)
    if np.any(np.abs(arr[:, 0]) > 180) or np.any(np.abs(arr[:, 1]) > 90):
        raise ConfigurationError(f"{path}: shoreline vertices outside lon/lat bounds")
    return arr


def read_patches(path: str | Path) -> PatchSet:
    """Read the patch table (station_id, date, variable, action, value)."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        required = {"station_id", "date", "variable", "action", "value"}
        if reader.fieldnames is None or not required <= set(reader.fieldnames):
            missing = sorted(required - set(reader.fieldnames or []))
            raise ParseError(f"{path}: patch file missing columns {missing}")
        patches = []
        for row in reader:
            action = row["action"].strip()
            date_token = row["date"].strip()
            date = dt.date.fromisoformat(date_token) if date_token else None
            raw_value = row["value"].strip()
            value: float | str | None
            if action == "substitute_from":
                value = raw_value
            elif raw_value == "":
                value = None
            else:
                value = float(raw_value)
            patches.append(
                Patch(
                    station_id=row["station_id"].strip(),
                    variable=row["variable"].strip(),
                    action=action,
                    date=date,
                    value=value,
                )
            )
    patch_set = PatchSet(patches)
    patch_set.validate()
    return patch_set
