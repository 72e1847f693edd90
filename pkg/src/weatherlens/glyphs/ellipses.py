"""Correlation ellipses: tilt encodes sign, width encodes magnitude.

The ellipse is generated in polar form around one focus pinned at the
origin, with the semi-major axis along y = x for positive correlations and
y = -x for negative ones. It is then recentered, scaled to sit inside the
[-0.5, 0.5] square, and placed at an anchor with a per-slot offset.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

log = logging.getLogger(__name__)

DEFAULT_EPSILON = 1e-6
DEFAULT_VERTICES = 72
#: slot offsets (in ellipse-box units) that keep the three boxes disjoint
DEFAULT_OFFSETS = ((-1.1, 0.0), (0.0, 0.0), (1.1, 0.0))


def nudge_rho(rho: float, epsilon: float = DEFAULT_EPSILON) -> float:
    """Move rho in {-1, 0, 1} off the degenerate values by epsilon."""
    if not -1.0 <= rho <= 1.0:
        raise ValueError(f"rho must lie in [-1, 1], got {rho}")
    if rho == 0.0:
        return epsilon
    if rho == 1.0:
        return 1.0 - epsilon
    if rho == -1.0:
        return -1.0 + epsilon
    return rho


def ellipse_radius(rho: float, theta) -> np.ndarray | float:
    """Radius from the pinned focus at angle theta for correlation rho."""
    rho = nudge_rho(rho)
    a = abs(rho)
    axis = math.copysign(math.pi / 4.0, rho)
    theta_arr = np.asarray(theta, dtype=float)
    r = (1.0 - a) ** 2 / (1.0 - math.sqrt(a * (2.0 - a)) * np.cos(theta_arr - axis))
    return float(r) if np.ndim(theta) == 0 else r


def scale_to_unit_square(xy: np.ndarray) -> np.ndarray:
    """Scale so max |x| and max |y| are exactly 0.5 (idempotent)."""
    xy = np.asarray(xy, dtype=float)
    mx = np.max(np.abs(xy[:, 0]))
    my = np.max(np.abs(xy[:, 1]))
    if mx == 0.0 or my == 0.0:
        raise ValueError("degenerate ellipse cannot be scaled")
    return np.column_stack((xy[:, 0] / (2.0 * mx), xy[:, 1] / (2.0 * my)))


def ellipse_polygon(rho: float, n_vertices: int = DEFAULT_VERTICES) -> np.ndarray:
    """Closed polyline (n_vertices + 1, 2) circumscribed in the unit square."""
    if n_vertices < 16:
        raise ValueError("n_vertices must be at least 16")
    rho = nudge_rho(rho)
    a = abs(rho)
    shift = a * (2.0 - a) / math.sqrt(2.0)
    theta = np.linspace(0.0, 2.0 * math.pi, n_vertices, endpoint=False)
    r = ellipse_radius(rho, theta)
    xy = np.column_stack(
        (r * np.cos(theta) - shift, r * np.sin(theta) - math.copysign(shift, rho))
    )
    xy = scale_to_unit_square(xy)
    return np.vstack((xy, xy[:1]))


@dataclass
class EllipseGeometry:
    region: str
    var_x: str
    var_y: str
    rho: float
    significant: bool
    anchor: tuple[float, float]
    offset: tuple[float, float]
    vertices: np.ndarray  # closed polyline in projected coordinates


def place_ellipse_matrix(
    ellipses: list[dict],
    anchor: tuple[float, float],
    alpha: float,
    offsets=DEFAULT_OFFSETS,
    n_vertices: int = DEFAULT_VERTICES,
) -> list[EllipseGeometry]:
    """Place one ellipse per slot offset around a shared anchor.

    Each spec dict needs region/var_x/var_y/rho/significant. Slot offsets
    are in ellipse-box units: a placed ellipse occupies a box of half-width
    alpha * 0.5 around anchor + alpha * offset, so two slots overlap when
    their offsets differ by less than 1.0 on both axes; overlap is measured
    and logged, not fatal.
    """
    if len(ellipses) > len(offsets):
        raise ValueError(f"{len(ellipses)} ellipses but only {len(offsets)} slot offsets")
    ax, ay = anchor
    placed: list[EllipseGeometry] = []
    for spec, (o1, o2) in zip(ellipses, offsets):
        poly = ellipse_polygon(spec["rho"], n_vertices)
        vertices = np.column_stack(
            (ax + alpha * (poly[:, 0] + o1), ay + alpha * (poly[:, 1] + o2))
        )
        placed.append(
            EllipseGeometry(
                region=spec["region"],
                var_x=spec["var_x"],
                var_y=spec["var_y"],
                rho=float(spec["rho"]),
                significant=bool(spec["significant"]),
                anchor=(float(ax), float(ay)),
                offset=(float(o1), float(o2)),
                vertices=vertices,
            )
        )
    for i in range(len(placed)):
        for j in range(i + 1, len(placed)):
            overlap = _box_overlap(placed[i].vertices, placed[j].vertices)
            if overlap > 0.0:
                log.warning(
                    "ellipse slots %s and %s at anchor (%.1f, %.1f) overlap by area %.3g",
                    placed[i].offset, placed[j].offset, ax, ay, overlap,
                )
    return placed


def _box_overlap(a: np.ndarray, b: np.ndarray) -> float:
    """Overlap area of two polylines' axis-aligned bounding boxes."""
    ax0, ay0, ax1, ay1 = a[:, 0].min(), a[:, 1].min(), a[:, 0].max(), a[:, 1].max()
    bx0, by0, bx1, by1 = b[:, 0].min(), b[:, 1].min(), b[:, 0].max(), b[:, 1].max()
    w = min(ax1, bx1) - max(ax0, bx0)
    h = min(ay1, by1) - max(ay0, by0)
    return float(w * h) if (w > 0 and h > 0) else 0.0
