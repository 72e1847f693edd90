"""Command-line interface: one subcommand per pipeline stage plus run/serve."""

from __future__ import annotations

import argparse
import logging
import os
import sys

from .exceptions import WeatherLensError

PORT_ENV_VAR = "WEATHERLENS_PORT"


def resolve_port(cli_port: int) -> int:
    """The port flag, unless the environment overrides it."""
    return int(os.environ.get(PORT_ENV_VAR, cli_port))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weatherlens",
        description=(
            "Clean daily weather data, cluster stations into weather regions, "
            "score forecast errors, rank predictors, build map glyph geometry, "
            "and serve the results."
        ),
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="parse and clean the raw input tables")
    p.add_argument("--locations", required=True)
    p.add_argument("--measurements", required=True)
    p.add_argument("--forecasts", required=True)
    p.add_argument("--shoreline", required=True)
    p.add_argument("--patches", required=True)
    p.add_argument("--out", required=True, help="output directory for cleaned tables")
    p.add_argument(
        "--schema",
        default=None,
        help="input layout: 'canonical' (default), 'dataexpo2018', or a JSON file",
    )

    p = sub.add_parser("cluster", help="profile stations and cut the Ward tree")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--profiles", help="existing profiles table")
    group.add_argument("--clean", help="cleaned-tables directory (profiles are derived)")
    p.add_argument("--k", type=int, default=6)
    p.add_argument("--anchors", default=None, help="JSON file: region name -> anchor station id")
    p.add_argument("--out", required=True)

    p = sub.add_parser("errors", help="error cells and cross-metric correlations")
    p.add_argument("--clean", required=True, help="cleaned-tables directory")
    p.add_argument("--assignments", required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("importance", help="per-region forest permutation importance")
    p.add_argument("--errors", required=True, help="errors-stage output directory")
    p.add_argument("--profiles", required=True)
    p.add_argument("--assignments", required=True)
    p.add_argument("--trees", type=int, default=500)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out", required=True)

    p = sub.add_parser("glyphs", help="map-ready glyph and ellipse geometry")
    p.add_argument("--errors", required=True, help="errors-stage output directory")
    p.add_argument("--correlations", required=True)
    p.add_argument("--assignments", required=True)
    p.add_argument("--alpha", type=float, default=25.0)
    p.add_argument("--out", required=True)

    p = sub.add_parser("run", help="run the full pipeline from a config file")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True, help="bundle output directory")

    p = sub.add_parser("serve", help="serve a bundle over HTTP (read-only)")
    p.add_argument("--bundle", required=True)
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--static", default=None, help="directory of explorer assets to serve at /")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return _dispatch(args)
    except WeatherLensError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "ingest":
        from . import ingest

        report = ingest.run_ingest(
            locations=args.locations,
            measurements=args.measurements,
            forecasts=args.forecasts,
            shoreline=args.shoreline,
            patches=args.patches,
            out_dir=args.out,
            schemas=args.schema,
        )
        removed = sum(report.range_removals.values())
        print(f"ingest complete: {removed} out-of-range values removed; report in {args.out}")
    elif args.command == "cluster":
        import json

        from .regions import run_cluster

        anchors = None
        if args.anchors:
            anchors = json.loads(open(args.anchors).read())
        run_cluster(
            args.out,
            k=args.k,
            clean_dir=args.clean,
            profiles_path=args.profiles,
            region_anchors=anchors,
        )
        print(f"cluster complete: k={args.k}; outputs in {args.out}")
    elif args.command == "errors":
        from .verification import run_errors

        run_errors(args.clean, args.assignments, args.out)
        print(f"errors complete: outputs in {args.out}")
    elif args.command == "importance":
        from .importance import run_importance

        run_importance(
            args.errors,
            args.profiles,
            args.assignments,
            args.out,
            n_trees=args.trees,
            seed=args.seed,
        )
        print(f"importance complete: outputs in {args.out}")
    elif args.command == "glyphs":
        from .glyphs import run_glyphs

        run_glyphs(args.errors, args.correlations, args.assignments, args.out, alpha=args.alpha)
        print(f"glyphs complete: outputs in {args.out}")
    elif args.command == "run":
        from .service import PipelineConfig, pipeline_run

        config = PipelineConfig.from_file(args.config)
        pipeline_run(config, args.out)
        print(f"pipeline complete: bundle at {args.out}")
    elif args.command == "serve":
        from .service import serve

        serve(args.bundle, resolve_port(args.port), args.static)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
