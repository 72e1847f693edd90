"""Shared fixtures: the synthetic world, its cleaned tables, and a full bundle."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from synthdata import write_fixture  # noqa: E402

FIXTURE_SEED = 20180715
FIXTURE_CONFIG = {
    "inputs": {
        "locations": "locations.csv",
        "measurements": "measurements.csv",
        "forecasts": "forecasts.csv",
        "shoreline": "shoreline.csv",
        "patches": "patches.csv",
    },
    "k": 6,
    "seed": 7,
    "trees": 64,
    "alpha": 30.0,
    "region_anchors": {
        "Coastal": "S01",
        "Southeast": "S12",
        "Northeast": "S19",
        "Intermountain": "S27",
        "Midwest": "S36",
        "Southwest": "S39",
    },
}


@pytest.fixture(scope="session")
def world(tmp_path_factory) -> tuple[Path, dict]:
    """Raw input files plus the generator's ground truth."""
    root = tmp_path_factory.mktemp("world")
    truth = write_fixture(root, seed=FIXTURE_SEED)
    (root / "config.json").write_text(json.dumps(FIXTURE_CONFIG))
    return root, truth


@pytest.fixture(scope="session")
def bundle(world) -> tuple[Path, dict]:
    """A complete artifact bundle built once from the synthetic world."""
    from weatherlens.service import PipelineConfig, pipeline_run

    root, truth = world
    out = root / "bundle"
    config = PipelineConfig.from_file(root / "config.json")
    pipeline_run(config, out)
    return out, truth


@pytest.fixture(scope="session")
def clean_dir(bundle) -> Path:
    return bundle[0] / "clean"
