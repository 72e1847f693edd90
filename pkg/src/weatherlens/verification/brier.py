"""Skill of probabilistic precipitation forecasts relative to climatology."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..exceptions import UndefinedSkillError


@dataclass
class PrecipSeries:
    """Per-station daily precipitation outcomes and forecast probabilities.

    ``outcomes`` is 0/1 per included day; ``probs`` is days x lags with NaN
    for missing forecasts; ``months`` gives each day's calendar month. The
    climatology is the mean outcome over the entire series and is fixed at
    construction, independent of any later day/lag restriction.
    """

    station_id: str
    outcomes: np.ndarray
    probs: np.ndarray
    months: np.ndarray
    lags: tuple[int, ...] = (0, 1, 2, 3, 4, 5)
    climatology: float = field(init=False)

    def __post_init__(self):
        self.outcomes = np.asarray(self.outcomes, dtype=float)
        self.probs = np.asarray(self.probs, dtype=float)
        self.months = np.asarray(self.months, dtype=int)
        if self.outcomes.ndim != 1 or self.probs.shape != (len(self.outcomes), len(self.lags)):
            raise ValueError("probs must be (n_days, n_lags) aligned with outcomes")
        if not np.all((self.outcomes == 0) | (self.outcomes == 1)):
            raise ValueError("outcomes must be 0/1")
        with np.errstate(invalid="ignore"):
            if np.any(self.probs[np.isfinite(self.probs)] < 0) or np.any(
                self.probs[np.isfinite(self.probs)] > 1
            ):
                raise ValueError("probabilities must lie in [0, 1]")
        self.climatology = float(self.outcomes.mean()) if len(self.outcomes) else float("nan")


def brier_skill_score(
    series: PrecipSeries,
    lags: tuple[int, ...] | None = None,
    day_mask: np.ndarray | None = None,
) -> float:
    """Brier Skill Score over the requested lags (and optional day subset).

    1 is a perfect forecast, 0 matches climatology, negative is worse than
    climatology. Missing forecast cells drop out of the numerator and the
    matching denominator term, so forecast and reference are always compared
    on identical support.
    """
    if len(series.outcomes) == 0:
        raise UndefinedSkillError(f"{series.station_id}: no days in series")
    P = series.climatology
    if P in (0.0, 1.0):
        raise UndefinedSkillError(
            f"{series.station_id}: climatology {P:g} makes the reference score zero"
        )
    cols = (
        np.arange(len(series.lags))
        if lags is None
        else np.array([series.lags.index(l) for l in lags], dtype=int)
    )
    probs = series.probs[:, cols]
    outcomes = series.outcomes
    if day_mask is not None:
        probs = probs[day_mask]
        outcomes = outcomes[day_mask]
    present = np.isfinite(probs)
    if not present.any():
        raise UndefinedSkillError(f"{series.station_id}: no forecast cells in selection")
    O = np.broadcast_to(outcomes[:, None], probs.shape)
    num = float(np.sum(((probs - O) ** 2)[present]))
    den = float(np.sum(((P - O) ** 2)[present]))
    return 1.0 - num / den


def precip_error(
    series: PrecipSeries,
    lags: tuple[int, ...] | None = None,
    day_mask: np.ndarray | None = None,
) -> float:
    """1 - BSS, so larger is worse like the temperature errors."""
    return 1.0 - brier_skill_score(series, lags=lags, day_mask=day_mask)
