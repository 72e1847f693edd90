"""Machine-readable account of what cleaning did and why."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path


@dataclass
class CleaningReport:
    """Counts of removals/replacements per cleaning rule, plus warnings."""

    parse_warnings: Counter = field(default_factory=Counter)
    range_removals: Counter = field(default_factory=Counter)
    patches_applied: Counter = field(default_factory=Counter)
    patches_skipped: list[str] = field(default_factory=list)
    wind_fusion: Counter = field(default_factory=Counter)
    forecast_filtering: Counter = field(default_factory=Counter)
    station_notes: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def warn(self, message: str) -> None:
        self.warnings.append(message)

    def to_dict(self) -> dict:
        return {
            "parse_warnings": dict(sorted(self.parse_warnings.items())),
            "range_removals": dict(sorted(self.range_removals.items())),
            "patches_applied": dict(sorted(self.patches_applied.items())),
            "patches_skipped": list(self.patches_skipped),
            "wind_fusion": dict(sorted(self.wind_fusion.items())),
            "forecast_filtering": dict(sorted(self.forecast_filtering.items())),
            "station_notes": list(self.station_notes),
            "warnings": list(self.warnings),
        }

    def write(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n")
