"""Glyph stage: projected anchors, seasonal star glyphs, correlation ellipses."""

from __future__ import annotations

import logging
from pathlib import Path

import numpy as np

from ..exceptions import ConfigurationError
from ..tableio import write_json
from .ellipses import (
    DEFAULT_EPSILON,
    DEFAULT_OFFSETS,
    DEFAULT_VERTICES,
    EllipseGeometry,
    ellipse_polygon,
    ellipse_radius,
    nudge_rho,
    place_ellipse_matrix,
    scale_to_unit_square,
)
from .projection import AlbersEqualArea, Inset, UsProjection
from .stars import GlyphPolygon, month_angle, seasonal_glyph

__all__ = [
    "AlbersEqualArea",
    "Inset",
    "UsProjection",
    "GlyphPolygon",
    "seasonal_glyph",
    "month_angle",
    "EllipseGeometry",
    "ellipse_radius",
    "ellipse_polygon",
    "nudge_rho",
    "scale_to_unit_square",
    "place_ellipse_matrix",
    "DEFAULT_OFFSETS",
    "DEFAULT_VERTICES",
    "DEFAULT_EPSILON",
    "GLYPH_METRICS",
    "run_glyphs",
]

log = logging.getLogger(__name__)

GLYPH_METRICS = {
    "min_temp": "mean_abs_err_min_temp",
    "max_temp": "mean_abs_err_max_temp",
    "precip": "precip_error",
}


def _monthly_errors(cells_by_station, station_id: str, column: str) -> list[float | None]:
    per_month: list[float | None] = [None] * 12
    for cell in cells_by_station.get(station_id, []):
        if cell.lag == "all" and cell.month != "all":
            per_month[cell.month - 1] = getattr(cell, column)
    return per_month


def run_glyphs(
    errors_dir: str | Path,
    correlations_path: str | Path,
    assignments_path: str | Path,
    out_dir: str | Path,
    alpha: float = 25.0,
    offsets=DEFAULT_OFFSETS,
    n_vertices: int = DEFAULT_VERTICES,
    projection: UsProjection | None = None,
) -> dict:
    """Build the render-ready geometry bundle and write glyphs.json."""
    from ..ingest import load_clean_stations
    from ..regions import load_assignments
    from ..verification import load_correlations, load_error_cells

    errors_dir = Path(errors_dir)
    stations_path = errors_dir / "stations.csv"
    if not stations_path.exists():
        raise ConfigurationError(f"{stations_path} not found (produced by the errors stage)")
    stations = load_clean_stations(stations_path)
    cells = load_error_cells(errors_dir / "error_cells.csv")
    correlations = load_correlations(correlations_path)
    assignment, region_names = load_assignments(assignments_path)
    projection = projection or UsProjection()

    lonlat = np.array([[m.longitude, m.latitude] for m in stations])
    xy = projection.transform(lonlat)
    anchors = {m.station_id: (float(x), float(y)) for m, (x, y) in zip(stations, xy)}

    cells_by_station: dict[str, list] = {}
    for cell in cells:
        cells_by_station.setdefault(cell.station_id, []).append(cell)

    global_max: dict[str, float] = {}
    for metric, column in GLYPH_METRICS.items():
        values = [
            getattr(c, column)
            for c in cells
            if c.lag == "all" and c.month != "all" and getattr(c, column) is not None
        ]
        global_max[metric] = max(values) if values else 0.0

    glyphs = []
    for station in sorted(anchors):
        for metric, column in GLYPH_METRICS.items():
            if global_max[metric] <= 0:
                continue
            monthly = _monthly_errors(cells_by_station, station, column)
            glyph = seasonal_glyph(
                monthly, anchors[station], alpha, global_max[metric], station, metric
            )
            if glyph is not None:
                glyphs.append(glyph)

    # one ellipse matrix per region, anchored at the member-station centroid
    members_by_label: dict[int, list[str]] = {}
    for sid, label in assignment.items():
        members_by_label.setdefault(label, []).append(sid)
    ellipses: list[EllipseGeometry] = []
    for label in sorted(region_names):
        name = region_names[label]
        members = [s for s in members_by_label.get(label, []) if s in anchors]
        if not members:
            log.warning("region %s has no projected stations; skipping its ellipses", name)
            continue
        pts = np.array([anchors[s] for s in sorted(members)])
        centroid = (float(pts[:, 0].mean()), float(pts[:, 1].mean()))
        specs = [
            {
                "region": name,
                "var_x": r.var_x,
                "var_y": r.var_y,
                "rho": r.rho,
                "significant": r.significant,
            }
            for r in correlations
            if r.region == name
        ]
        if specs:
            ellipses.extend(
                place_ellipse_matrix(specs, centroid, alpha, offsets, n_vertices)
            )

    bundle = {
        "projection": projection.to_dict(),
        "alpha": alpha,
        "offsets": [list(o) for o in offsets],
        "global_max": global_max,
        "stations": [
            {"station_id": sid, "anchor": [anchors[sid][0], anchors[sid][1]]}
            for sid in sorted(anchors)
        ],
        "glyphs": [
            {
                "station_id": g.station_id,
                "metric": g.metric,
                "anchor": list(g.anchor),
                "radii": [float(r) for r in g.radii],
                "gap_months": list(g.gap_months),
                "vertices": [[float(x), float(y)] for x, y in g.vertices],
            }
            for g in glyphs
        ],
        "ellipses": [
            {
                "region": e.region,
                "var_x": e.var_x,
                "var_y": e.var_y,
                "rho": e.rho,
                "significant": e.significant,
                "anchor": list(e.anchor),
                "offset": list(e.offset),
                "vertices": [[float(x), float(y)] for x, y in e.vertices],
            }
            for e in ellipses
        ],
    }
    write_json(Path(out_dir) / "glyphs.json", bundle)
    return bundle
