"""Pipeline run configuration (structured-text JSON file)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..exceptions import ConfigurationError
from ..glyphs.ellipses import DEFAULT_OFFSETS, DEFAULT_VERTICES

REQUIRED_INPUTS = ("locations", "measurements", "forecasts", "shoreline", "patches")


@dataclass
class PipelineConfig:
    inputs: dict[str, str]
    k: int = 6
    seed: int = 42
    trees: int = 500
    alpha: float = 25.0
    offsets: tuple = DEFAULT_OFFSETS
    ellipse_vertices: int = DEFAULT_VERTICES
    schema: str | None = None
    region_anchors: dict[str, str] = field(default_factory=dict)
    projection: dict = field(default_factory=dict)

    def validate(self) -> None:
        missing = [k for k in REQUIRED_INPUTS if k not in self.inputs]
        if missing:
            raise ConfigurationError(f"config inputs missing {missing}")
        for label in REQUIRED_INPUTS:
            if not Path(self.inputs[label]).exists():
                raise ConfigurationError(f"missing {label} file: {self.inputs[label]}")
        if self.k < 1:
            raise ConfigurationError("k must be >= 1")
        if self.alpha <= 0:
            raise ConfigurationError("alpha must be positive")
        if self.trees < 1:
            raise ConfigurationError("trees must be >= 1")

    def to_dict(self) -> dict:
        return {
            "inputs": dict(self.inputs),
            "k": self.k,
            "seed": self.seed,
            "trees": self.trees,
            "alpha": self.alpha,
            "offsets": [list(o) for o in self.offsets],
            "ellipse_vertices": self.ellipse_vertices,
            "schema": self.schema,
            "region_anchors": dict(self.region_anchors),
            "projection": dict(self.projection),
        }

    @classmethod
    def from_file(cls, path: str | Path) -> "PipelineConfig":
        path = Path(path)
        try:
            raw = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"{path}: not valid JSON: {exc}")
        if "inputs" not in raw:
            raise ConfigurationError(f"{path}: config needs an 'inputs' section")
        inputs = {
            key: str((path.parent / value).resolve()) if not Path(value).is_absolute() else value
            for key, value in raw["inputs"].items()
        }
        cfg = cls(
            inputs=inputs,
            k=int(raw.get("k", 6)),
            seed=int(raw.get("seed", 42)),
            trees=int(raw.get("trees", 500)),
            alpha=float(raw.get("alpha", 25.0)),
            offsets=tuple(tuple(o) for o in raw.get("offsets", DEFAULT_OFFSETS)),
            ellipse_vertices=int(raw.get("ellipse_vertices", DEFAULT_VERTICES)),
            schema=raw.get("schema"),
            region_anchors=dict(raw.get("region_anchors", {})),
            projection=dict(raw.get("projection", {})),
        )
        cfg.validate()
        return cfg
