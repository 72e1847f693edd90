"""Join measurements with forecasts and aggregate error cells.

A station's error cells form a (lag x month) grid where either axis may be
pooled ("all"). Temperature cells are pooled means of absolute errors over
every contributing (day, lag) pair; the precipitation cell is 1 - BSS with
the skill score restricted to the group's days and lags while keeping the
station's full-record climatology as reference.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..exceptions import UndefinedSkillError
from ..ingest.clean import detect_precip_event
from ..ingest.records import DailyRecord, ForecastRecord
from ..ingest.schema import MAX_LAG
from .brier import PrecipSeries, precip_error

LAGS = tuple(range(MAX_LAG + 1))
ERROR_VARIABLES = ("mean_abs_err_min_temp", "mean_abs_err_max_temp", "precip_error")


def temp_abs_error(forecast: float | None, actual: float | None) -> float | None:
    """Absolute temperature error; None when either side is absent."""
    if forecast is None or actual is None:
        return None
    return abs(forecast - actual)


@dataclass
class StationSeries:
    """Per-station day-aligned measurement and forecast arrays."""

    station_id: str
    months: np.ndarray          # (n,) calendar month of each day
    err_min: np.ndarray         # (n, 6) |fmin - min_temp|, NaN absent
    err_max: np.ndarray         # (n, 6)
    probs: np.ndarray           # (n, 6) forecast precip probability, NaN absent
    precip_included: np.ndarray  # (n,) day has a defined precipitation outcome
    outcomes: np.ndarray        # (n,) 0/1 where included, NaN elsewhere

    def precip_series(self) -> PrecipSeries:
        mask = self.precip_included
        return PrecipSeries(
            station_id=self.station_id,
            outcomes=self.outcomes[mask],
            probs=self.probs[mask],
            months=self.months[mask],
            lags=LAGS,
        )


@dataclass
class ErrorCell:
    station_id: str
    lag: int | str              # 0..5 or "all"
    month: int | str            # 1..12 or "all"
    mean_abs_err_min_temp: float | None
    mean_abs_err_max_temp: float | None
    precip_error: float | None
    n_days: int
    n_min_temp: int
    n_max_temp: int
    n_precip: int


def build_station_series(
    daily: list[DailyRecord], forecasts: list[ForecastRecord]
) -> list[StationSeries]:
    """Align cleaned measurements and forecasts into per-station arrays.

    A day enters the precipitation series only when its outcome is
    determinable: the precipitation measurement is present, or the event
    text already names rain/snow. Forecasts for dates without a measurement
    row have no truth to compare against and are ignored.
    """
    by_station: dict[str, list[DailyRecord]] = {}
    for rec in daily:
        by_station.setdefault(rec.station_id, []).append(rec)
    fc_index: dict[str, dict] = {}
    for fc in forecasts:
        fc_index.setdefault(fc.station_id, {})[(fc.target_date, fc.lag)] = fc

    out: list[StationSeries] = []
    for station_id in sorted(by_station):
        rows = sorted(by_station[station_id], key=lambda r: r.date)
        n = len(rows)
        months = np.array([r.date.month for r in rows], dtype=int)
        err_min = np.full((n, len(LAGS)), np.nan)
        err_max = np.full((n, len(LAGS)), np.nan)
        probs = np.full((n, len(LAGS)), np.nan)
        included = np.zeros(n, dtype=bool)
        outcomes = np.full(n, np.nan)
        fcs = fc_index.get(station_id, {})
        for i, rec in enumerate(rows):
            event = detect_precip_event(rec)
            if rec.precipitation is not None or event:
                included[i] = True
                outcomes[i] = 1.0 if event else 0.0
            for j, lag in enumerate(LAGS):
                fc = fcs.get((rec.date, lag))
                if fc is None:
                    continue
                e = temp_abs_error(fc.fmin_temp, rec.min_temp)
                if e is not None:
                    err_min[i, j] = e
                e = temp_abs_error(fc.fmax_temp, rec.max_temp)
                if e is not None:
                    err_max[i, j] = e
                if fc.precip_prob is not None:
                    probs[i, j] = fc.precip_prob
        out.append(
            StationSeries(
                station_id=station_id,
                months=months,
                err_min=err_min,
                err_max=err_max,
                probs=probs,
                precip_included=included,
                outcomes=outcomes,
            )
        )
    return out


def _pooled_mean(values: np.ndarray) -> tuple[float | None, int]:
    present = np.isfinite(values)
    count = int(present.sum())
    if count == 0:
        return None, 0
    return float(values[present].sum() / count), count


def aggregate_cell(
    series: StationSeries, lag: int | None, month: int | None
) -> ErrorCell | None:
    """One error cell; None when nothing contributes to the selection."""
    day_mask = np.ones(len(series.months), dtype=bool) if month is None else series.months == month
    cols = list(LAGS) if lag is None else [lag]
    emin = series.err_min[np.ix_(day_mask, cols)]
    emax = series.err_max[np.ix_(day_mask, cols)]
    mean_min, n_min = _pooled_mean(emin)
    mean_max, n_max = _pooled_mean(emax)

    p_err: float | None = None
    n_precip = 0
    pmask = series.precip_included & day_mask
    if pmask.any():
        sub = series.probs[np.ix_(pmask, cols)]
        n_precip = int(np.isfinite(sub).sum())
        if n_precip:
            try:
                p_err = precip_error(
                    series.precip_series(),
                    lags=tuple(cols),
                    day_mask=pmask[series.precip_included],
                )
            except UndefinedSkillError:
                p_err = None

    day_idx = np.flatnonzero(day_mask)
    contrib_days = set()
    for mat in (emin, emax):
        if mat.size:
            hit = np.isfinite(mat).any(axis=1)
            contrib_days.update(day_idx[hit])
    if n_precip:
        sub = series.probs[np.ix_(pmask, cols)]
        hit = np.isfinite(sub).any(axis=1)
        contrib_days.update(np.flatnonzero(pmask)[hit])
    n_days = len(contrib_days)
    if n_days == 0:
        return None
    return ErrorCell(
        station_id=series.station_id,
        lag="all" if lag is None else lag,
        month="all" if month is None else month,
        mean_abs_err_min_temp=mean_min,
        mean_abs_err_max_temp=mean_max,
        precip_error=p_err,
        n_days=n_days,
        n_min_temp=n_min,
        n_max_temp=n_max,
        n_precip=n_precip,
    )


def aggregate_errors(
    series_list: list[StationSeries],
    by_lag: bool = True,
    by_month: bool = True,
) -> list[ErrorCell]:
    """Full cell grid per station: every lag/month combination plus "all" margins."""
    lag_choices: list[int | None] = [None] + (list(LAGS) if by_lag else [])
    month_choices: list[int | None] = [None] + (list(range(1, 13)) if by_month else [])
    cells: list[ErrorCell] = []
    for series in series_list:
        for lag in lag_choices:
            for month in month_choices:
                cell = aggregate_cell(series, lag, month)
                if cell is not None:
                    cells.append(cell)
    return cells
