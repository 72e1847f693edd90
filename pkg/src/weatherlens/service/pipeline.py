"""End-to-end pipeline orchestration over the on-disk stage interfaces.

Stages run in dependency order; any failure is wrapped in a StageError
carrying the stage name and the partial bundle is marked invalid in its
manifest. A rerun with identical inputs and seeds produces byte-identical
bundles: every stage writes deterministically and all randomness is keyed
by the configured seed.
"""

from __future__ import annotations

import logging
from pathlib import Path

from .. import ingest
from ..exceptions import StageError, WeatherLensError
from ..glyphs import UsProjection, run_glyphs
from ..importance import run_importance
from ..regions import run_cluster
from ..tableio import write_json
from ..verification import run_errors
from .bundle import write_manifest
from .config import PipelineConfig

log = logging.getLogger(__name__)

STAGES = ("ingest", "cluster", "errors", "importance", "glyphs")


def pipeline_run(config: PipelineConfig, out_dir: str | Path) -> Path:
    """Run ingest -> cluster -> errors -> importance -> glyphs into a bundle."""
    config.validate()
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_json(out_dir / "config.json", config.to_dict())

    def _stage(name: str, fn) -> None:
        log.info("stage %s starting", name)
        try:
            fn()
        except WeatherLensError as exc:
            write_manifest(out_dir, valid=False, failed_stage=name)
            raise StageError(name, str(exc)) from exc
        except Exception as exc:  # unexpected bugs still name the stage
            write_manifest(out_dir, valid=False, failed_stage=name)
            raise StageError(name, f"unexpected {type(exc).__name__}: {exc}") from exc

    clean_dir = out_dir / "clean"
    _stage(
        "ingest",
        lambda: _run_ingest(config, clean_dir, out_dir),
    )
    _stage(
        "cluster",
        lambda: run_cluster(
            out_dir,
            k=config.k,
            clean_dir=clean_dir,
            region_anchors=config.region_anchors or None,
        ),
    )
    _stage(
        "errors",
        lambda: run_errors(clean_dir, out_dir / "assignments.csv", out_dir),
    )
    _stage(
        "importance",
        lambda: run_importance(
            out_dir,
            out_dir / "profiles.csv",
            out_dir / "assignments.csv",
            out_dir,
            n_trees=config.trees,
            seed=config.seed,
        ),
    )
    _stage(
        "glyphs",
        lambda: run_glyphs(
            out_dir,
            out_dir / "correlations.csv",
            out_dir / "assignments.csv",
            out_dir,
            alpha=config.alpha,
            offsets=config.offsets,
            n_vertices=config.ellipse_vertices,
            projection=UsProjection.from_dict(config.projection),
        ),
    )
    write_manifest(out_dir, valid=True)
    log.info("bundle complete at %s", out_dir)
    return out_dir


def _run_ingest(config: PipelineConfig, clean_dir: Path, out_dir: Path) -> None:
    report = ingest.run_ingest(
        locations=config.inputs["locations"],
        measurements=config.inputs["measurements"],
        forecasts=config.inputs["forecasts"],
        shoreline=config.inputs["shoreline"],
        patches=config.inputs["patches"],
        out_dir=clean_dir,
        schemas=config.schema,
    )
    # the cleaning report lives at the bundle root next to the manifest
    report.write(out_dir / "cleaning_report.json")
    (clean_dir / "cleaning_report.json").unlink(missing_ok=True)
