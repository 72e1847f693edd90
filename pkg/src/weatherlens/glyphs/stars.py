"""Seasonal star glyphs: a 12-month error series as radial polygon vertices.

January points straight up from the anchor and months proceed clockwise;
the vertex angle for month m is (4 - m) * pi / 6. Radii are the monthly
errors divided by a shared per-metric maximum so glyph size is comparable
across stations.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

log = logging.getLogger(__name__)


def month_angle(month: int) -> float:
    """Vertex angle in radians for calendar month 1..12."""
    if not 1 <= month <= 12:
        raise ValueError(f"month must be 1..12, got {month}")
    return (4 - month) * math.pi / 6.0


@dataclass
class GlyphPolygon:
    station_id: str
    metric: str
    anchor: tuple[float, float]
    vertices: np.ndarray        # (12, 2) projected coordinates, Jan..Dec
    radii: np.ndarray           # (12,) in [0, 1] before alpha scaling
    gap_months: tuple[int, ...]  # months rendered at radius 0 for lack of data


def seasonal_glyph(
    monthly_errors,
    anchor: tuple[float, float],
    alpha: float,
    global_max: float,
    station_id: str = "",
    metric: str = "",
) -> GlyphPolygon | None:
    """Build one glyph; returns None (with a warning) when all months are absent.

    An absent month renders at radius 0 and is listed in ``gap_months`` so a
    renderer can distinguish "no data" from "zero error". The anchor itself
    is not scaled by alpha; only the glyph-local offsets are, which keeps
    each glyph centered on its station.
    """
    if len(monthly_errors) != 12:
        raise ValueError("monthly_errors must have exactly 12 entries (Jan..Dec)")
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if global_max <= 0:
        raise ValueError("global_max must be positive")
    values = list(monthly_errors)
    if all(v is None for v in values):
        log.warning("station %s metric %s: all 12 months absent; no glyph", station_id, metric)
        return None
    radii = np.zeros(12)
    gaps = []
    for i, v in enumerate(values):
        if v is None:
            gaps.append(i + 1)
            continue
        if v < 0:
            raise ValueError(f"negative monthly error {v}")
        if v > global_max:
            raise ValueError(f"monthly error {v} exceeds global_max {global_max}")
        radii[i] = v / global_max
    angles = np.array([month_angle(m) for m in range(1, 13)])
    ax, ay = anchor
    vertices = np.column_stack(
        (ax + alpha * radii * np.cos(angles), ay + alpha * radii * np.sin(angles))
    )
    return GlyphPolygon(
        station_id=station_id,
        metric=metric,
        anchor=(float(ax), float(ay)),
        vertices=vertices,
        radii=radii,
        gap_months=tuple(gaps),
    )
