"""Cleaning transformations: range filters, patches, wind fusion, forecast rules.

All functions are pure: they return new record lists and leave inputs intact.
Out-of-range values become absent; nothing is ever clamped.
"""

from __future__ import annotations

import re
from dataclasses import replace

from .records import DailyRecord, ForecastRecord, PatchSet
from .report import CleaningReport
from .schema import MAX_LAG, RANGES_BY_FIELD
from ..exceptions import ConfigurationError

_EVENT_WORDS = re.compile(r"rain|snow", re.IGNORECASE)


def apply_range_filters(
    records: list[DailyRecord], report: CleaningReport | None = None
) -> list[DailyRecord]:
    """Null every field outside its validity range; keep the records."""
    report = report if report is not None else CleaningReport()
    out = []
    for rec in records:
        rec = replace(rec)
        for field_name, rng in RANGES_BY_FIELD.items():
            value = rec.get(field_name)
            if value is not None and not rng.contains(value):
                rec.set(field_name, None)
                report.range_removals[field_name] += 1
        out.append(rec)
    return out


def apply_patches(
    records: list[DailyRecord], patches: PatchSet, report: CleaningReport | None = None
) -> list[DailyRecord]:
    """Apply declarative cell edits; a patch with no target is skipped with a warning."""
    report = report if report is not None else CleaningReport()
    out = [replace(r) for r in records]
    by_key = {(r.station_id, r.date): r for r in out}
    by_station: dict[str, list[DailyRecord]] = {}
    for r in out:
        by_station.setdefault(r.station_id, []).append(r)

    for patch in patches:
        tag = f"{patch.action}:{patch.variable}"
        if patch.action in ("remove", "replace"):
            rec = by_key.get((patch.station_id, patch.date))
            if rec is None:
                report.patches_skipped.append(
                    f"{patch.action} {patch.variable}: no record for "
                    f"({patch.station_id}, {patch.date})"
                )
                continue
            rec.set(patch.variable, None if patch.action == "remove" else patch.value)
            report.patches_applied[tag] += 1
        elif patch.action in ("remove_below", "remove_above"):
            targets = by_station.get(patch.station_id, [])
            if patch.date is not None:
                targets = [r for r in targets if r.date == patch.date]
            if not targets:
                report.patches_skipped.append(
                    f"{patch.action} {patch.variable}: no records for {patch.station_id}"
                )
                continue
            hits = 0
            for rec in targets:
                value = rec.get(patch.variable)
                if value is None:
                    continue
                below = patch.action == "remove_below" and value < patch.value
                above = patch.action == "remove_above" and value > patch.value
                if below or above:
                    rec.set(patch.variable, None)
                    hits += 1
            report.patches_applied[tag] += hits
        elif patch.action == "substitute_from":
            donor_rows = {r.date: r for r in by_station.get(str(patch.value), [])}
            targets = by_station.get(patch.station_id, [])
            if not targets or not donor_rows:
                report.patches_skipped.append(
                    f"substitute_from {patch.variable}: missing "
                    f"{patch.station_id} or donor {patch.value}"
                )
                continue
            hits = 0
            for rec in targets:
                if rec.get(patch.variable) is not None:
                    continue
                donor = donor_rows.get(rec.date)
                if donor is not None and donor.get(patch.variable) is not None:
                    rec.set(patch.variable, donor.get(patch.variable))
                    hits += 1
            report.patches_applied[tag] += hits
    return out


def fuse_wind(max_wind_speed: float | None, max_gust: float | None) -> float | None:
    """Combine the two wind maxima, keeping the lower of the two."""
    if max_wind_speed is None:
        return max_gust
    if max_gust is None:
        return max_wind_speed
    return min(max_wind_speed, max_gust)


def fuse_wind_records(
    records: list[DailyRecord], report: CleaningReport | None = None
) -> list[DailyRecord]:
    """Fill max_wind from the raw wind fields and clear them."""
    report = report if report is not None else CleaningReport()
    out = []
    for rec in records:
        rec = replace(rec)
        speed, gust = rec.max_wind_speed, rec.max_gust
        rec.max_wind = fuse_wind(speed, gust)
        if speed is not None and gust is not None:
            report.wind_fusion["both_present_min_taken"] += 1
        elif speed is None and gust is None:
            report.wind_fusion["both_absent"] += 1
        else:
            report.wind_fusion["single_source"] += 1
        rec.max_wind_speed = None
        rec.max_gust = None
        out.append(rec)
    return out


def detect_precip_event(record: DailyRecord) -> bool:
    """True when measurable precipitation fell or the event text says rain/snow."""
    if record.precipitation is not None and record.precipitation > 0:
        return True
    return bool(record.events) and _EVENT_WORDS.search(record.events) is not None


def filter_lags(
    records: list[ForecastRecord], report: CleaningReport | None = None
) -> list[ForecastRecord]:
    """Drop forecasts with negative lags or lags past the supported horizon."""
    report = report if report is not None else CleaningReport()
    out = []
    for rec in records:
        if rec.lag < 0:
            report.forecast_filtering["negative_lag_dropped"] += 1
        elif rec.lag > MAX_LAG:
            report.forecast_filtering["high_lag_dropped"] += 1
        else:
            out.append(rec)
    return out


def dedupe_forecasts(
    records: list[ForecastRecord], report: CleaningReport | None = None
) -> list[ForecastRecord]:
    """Merge duplicate (station, target date, lag) rows into one record.

    Duplicate minimum-temperature forecasts keep the lowest value and
    duplicate precipitation probabilities the highest; duplicate maximum
    temperatures keep the highest (mirror of the minimum rule).
    """
    report = report if report is not None else CleaningReport()
    merged: dict[tuple, ForecastRecord] = {}
    for rec in records:
        prev = merged.get(rec.key)
        if prev is None:
            merged[rec.key] = replace(rec)
            continue
        # a collision on an already-present field is a true duplicate forecast
        if rec.fmin_temp is not None:
            if prev.fmin_temp is None:
                prev.fmin_temp = rec.fmin_temp
            else:
                report.forecast_filtering["duplicates_merged"] += 1
                prev.fmin_temp = min(prev.fmin_temp, rec.fmin_temp)
        if rec.fmax_temp is not None:
            if prev.fmax_temp is None:
                prev.fmax_temp = rec.fmax_temp
            else:
                report.forecast_filtering["duplicates_merged"] += 1
                prev.fmax_temp = max(prev.fmax_temp, rec.fmax_temp)
        if rec.precip_prob is not None:
            if prev.precip_prob is None:
                prev.precip_prob = rec.precip_prob
            else:
                report.forecast_filtering["duplicates_merged"] += 1
                prev.precip_prob = max(prev.precip_prob, rec.precip_prob)
    return sorted(merged.values(), key=lambda r: r.key)


def clean_measurements(
    records: list[DailyRecord], patches: PatchSet, report: CleaningReport | None = None
) -> list[DailyRecord]:
    """Range filters, then patches, then wind fusion; deterministic output order."""
    report = report if report is not None else CleaningReport()
    out = apply_range_filters(records, report)
    out = apply_patches(out, patches, report)
    out = fuse_wind_records(out, report)
    keys = {(r.station_id, r.date) for r in out}
    if len(keys) != len(out):
        raise ConfigurationError("duplicate (station_id, date) measurement rows")
    return sorted(out, key=lambda r: (r.station_id, r.date))


def clean_forecasts(
    records: list[ForecastRecord], report: CleaningReport | None = None
) -> list[ForecastRecord]:
    """Lag filtering then per-key deduplication; deterministic output order."""
    report = report if report is not None else CleaningReport()
    return dedupe_forecasts(filter_lags(records, report), report)
