"""Read-only HTTP API over a validated artifact bundle.

The bundle is loaded into memory once at startup (after manifest
verification) and never mutated, so concurrent requests need no locking
and identical queries return byte-identical payloads.
"""

from __future__ import annotations

import json
import logging
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from ..glyphs import GLYPH_METRICS
from ..importance import load_importance
from ..ingest import load_clean_stations
from ..regions import load_assignments
from ..tableio import read_csv_dicts, read_json
from ..verification import load_correlations, load_error_cells
from .bundle import SCHEMA_VERSION, verify_bundle

log = logging.getLogger(__name__)

VALID_LAGS = {"all", "0", "1", "2", "3", "4", "5"}
VALID_MONTHS = {"all"} | {str(m) for m in range(1, 13)}

CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".mjs": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json",
    ".svg": "image/svg+xml",
    ".png": "image/png",
    ".ico": "image/x-icon",
    ".map": "application/json",
}


def _cell_payload(cell) -> dict:
    return {
        "station_id": cell.station_id,
        "lag": cell.lag,
        "month": cell.month,
        "mean_abs_err_min_temp": cell.mean_abs_err_min_temp,
        "mean_abs_err_max_temp": cell.mean_abs_err_max_temp,
        "precip_error": cell.precip_error,
        "n_days": cell.n_days,
    }


class BundleState:
    """All artifact payloads preloaded and indexed for request handling."""

    def __init__(self, bundle_dir: str | Path):
        bundle_dir = Path(bundle_dir)
        self.manifest = verify_bundle(bundle_dir)
        stations = load_clean_stations(bundle_dir / "clean" / "stations.csv")
        assignment, region_names = load_assignments(bundle_dir / "assignments.csv")
        self.stations = [
            {
                "station_id": m.station_id,
                "name": m.name,
                "longitude": m.longitude,
                "latitude": m.latitude,
                "elevation": m.elevation,
                "distance_to_coast": m.distance_to_coast,
                "region_label": assignment.get(m.station_id),
                "region_name": region_names.get(assignment.get(m.station_id)),
            }
            for m in stations
        ]
        self.station_ids = {s["station_id"] for s in self.stations}
        self.cells = load_error_cells(bundle_dir / "error_cells.csv")
        self.correlations = [
            {
                "region": r.region,
                "var_x": r.var_x,
                "var_y": r.var_y,
                "n": r.n,
                "rho": r.rho,
                "p_value": r.p_value,
                "significant": r.significant,
            }
            for r in load_correlations(bundle_dir / "correlations.csv")
        ]
        self.importance = load_importance(bundle_dir / "importance.csv")
        self.glyph_bundle = read_json(bundle_dir / "glyphs.json")
        zrows = read_csv_dicts(bundle_dir / "zscores.csv")
        features = [c for c in (zrows[0].keys() if zrows else []) if c != "station_id"]
        self.zscore_table = {
            "features": features,
            "stations": [r["station_id"] for r in zrows],
            "values": [[float(r[f]) for f in features] for r in zrows],
        }
        members: dict[int, list[str]] = {}
        for sid, label in assignment.items():
            members.setdefault(label, []).append(sid)
        self.regions = [
            {
                "label": label,
                "name": region_names[label],
                "size": len(members.get(label, [])),
                "stations": sorted(members.get(label, [])),
            }
            for label in sorted(region_names)
        ]

    def station_detail(self, station_id: str) -> dict | None:
        meta = next((s for s in self.stations if s["station_id"] == station_id), None)
        if meta is None:
            return None
        mine = [c for c in self.cells if c.station_id == station_id]
        overall = next((c for c in mine if c.lag == "all" and c.month == "all"), None)
        return {
            **meta,
            "errors": {
                "overall": _cell_payload(overall) if overall else None,
                "by_lag": [
                    _cell_payload(c)
                    for c in sorted(
                        (c for c in mine if c.lag != "all" and c.month == "all"),
                        key=lambda c: c.lag,
                    )
                ],
                "by_month": [
                    _cell_payload(c)
                    for c in sorted(
                        (c for c in mine if c.lag == "all" and c.month != "all"),
                        key=lambda c: c.month,
                    )
                ],
            },
        }


def make_handler(state: BundleState, static_dir: Path | None):
    class Handler(BaseHTTPRequestHandler):
        server_version = "weatherlens/0.1"

        def log_message(self, fmt, *args):  # route through logging, quiet by default
            log.debug("%s - %s", self.address_string(), fmt % args)

        def _send_json(self, payload: dict, status: int = 200) -> None:
            body = json.dumps(
                {"schema_version": SCHEMA_VERSION, **payload}, sort_keys=True
            ).encode()
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(body)

        def _bad_request(self, message: str) -> None:
            self._send_json({"error": message}, status=400)

        def _not_found(self, message: str = "not found") -> None:
            self._send_json({"error": message}, status=404)

        def do_GET(self) -> None:  # noqa: N802 (http.server API)
            url = urlparse(self.path)
            query = {k: v[-1] for k, v in parse_qs(url.query).items()}
            parts = [p for p in url.path.split("/") if p]
            try:
                if parts[:1] == ["api"]:
                    self._handle_api(parts[1:], query)
                else:
                    self._handle_static(url.path)
            except BrokenPipeError:
                pass

        def _handle_api(self, parts: list[str], query: dict[str, str]) -> None:
            if parts == ["stations"]:
                self._send_json({"stations": state.stations})
            elif len(parts) == 2 and parts[0] == "stations":
                detail = state.station_detail(parts[1])
                if detail is None:
                    self._not_found(f"unknown station id {parts[1]!r}")
                else:
                    self._send_json({"station": detail})
            elif parts == ["regions"]:
                self._send_json({"regions": state.regions, "zscore_table": state.zscore_table})
            elif parts == ["errors"]:
                lag = query.get("lag", "all")
                month = query.get("month", "all")
                if lag not in VALID_LAGS:
                    return self._bad_request(f"lag must be 0..5 or 'all', got {lag!r}")
                if month not in VALID_MONTHS:
                    return self._bad_request(f"month must be 1..12 or 'all', got {month!r}")
                want_lag = lag if lag == "all" else int(lag)
                want_month = month if month == "all" else int(month)
                cells = [
                    _cell_payload(c)
                    for c in state.cells
                    if c.lag == want_lag and c.month == want_month
                ]
                self._send_json({"lag": lag, "month": month, "cells": cells})
            elif parts == ["correlations"]:
                self._send_json({"correlations": state.correlations})
            elif parts == ["importance"]:
                self._send_json({"importance": state.importance})
            elif parts == ["glyphs"]:
                metric = query.get("metric", "min_temp")
                if metric not in GLYPH_METRICS:
                    return self._bad_request(
                        f"metric must be one of {sorted(GLYPH_METRICS)}, got {metric!r}"
                    )
                gb = state.glyph_bundle
                self._send_json(
                    {
                        "metric": metric,
                        "alpha": gb["alpha"],
                        "projection": gb["projection"],
                        "global_max": gb["global_max"].get(metric),
                        "stations": gb["stations"],
                        "glyphs": [g for g in gb["glyphs"] if g["metric"] == metric],
                        "ellipses": gb["ellipses"],
                    }
                )
            else:
                self._not_found(f"unknown endpoint /api/{'/'.join(parts)}")

        def _handle_static(self, path: str) -> None:
            if static_dir is None:
                return self._not_found("no static assets configured")
            rel = path.lstrip("/") or "index.html"
            target = (static_dir / rel).resolve()
            if not str(target).startswith(str(static_dir.resolve())) or not target.is_file():
                return self._not_found()
            body = target.read_bytes()
            self.send_response(200)
            ctype = CONTENT_TYPES.get(target.suffix, "application/octet-stream")
            self.send_header("Content-Type", ctype)
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

    return Handler


def create_server(
    bundle_dir: str | Path, port: int = 0, static_dir: str | Path | None = None
) -> ThreadingHTTPServer:
    """Validate the bundle and return a ready-to-serve HTTP server."""
    state = BundleState(bundle_dir)
    static = Path(static_dir) if static_dir else None
    server = ThreadingHTTPServer(("127.0.0.1", port), make_handler(state, static))
    return server


def serve(bundle_dir: str | Path, port: int, static_dir: str | Path | None = None) -> None:
    server = create_server(bundle_dir, port, static_dir)
    host, actual_port = server.server_address[:2]
    log.info("serving bundle %s on http://%s:%s", bundle_dir, host, actual_port)
    print(f"weatherlens serving on http://{host}:{actual_port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
