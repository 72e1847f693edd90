"""Regions stage: station profiles, z-scores, Ward tree, and the k-cut."""

from __future__ import annotations

import logging
from pathlib import Path

import numpy as np

from ..exceptions import ConfigurationError
from ..tableio import opt_float, read_csv_dicts, write_csv, write_json
from .naming import assign_region_names
from .profiles import PROFILE_FEATURES, StationProfile, aggregate_profiles, profile_matrix
from .scaler import ZScoreScaler, ZScoreTable, standardize
from .ward import WardClustering, cut_linkage, pairwise_euclidean, ward_linkage

__all__ = [
    "aggregate_profiles",
    "profile_matrix",
    "PROFILE_FEATURES",
    "StationProfile",
    "ZScoreScaler",
    "ZScoreTable",
    "standardize",
    "WardClustering",
    "ward_linkage",
    "cut_linkage",
    "pairwise_euclidean",
    "assign_region_names",
    "run_cluster",
    "write_profiles",
    "load_profiles",
    "load_assignments",
]

log = logging.getLogger(__name__)


def write_profiles(path: str | Path, station_ids: list[str], X: np.ndarray) -> None:
    rows = []
    for sid, row in zip(station_ids, X):
        rows.append([sid] + [None if np.isnan(v) else float(v) for v in row])
    write_csv(path, ("station_id",) + tuple(PROFILE_FEATURES), rows)


def load_profiles(path: str | Path) -> tuple[list[str], np.ndarray]:
    rows = read_csv_dicts(path)
    if not rows:
        raise ConfigurationError(f"{path}: empty profiles table")
    station_ids = [r["station_id"] for r in rows]
    X = np.full((len(rows), len(PROFILE_FEATURES)), np.nan)
    for i, r in enumerate(rows):
        for j, feat in enumerate(PROFILE_FEATURES):
            v = opt_float(r.get(feat))
            if v is not None:
                X[i, j] = v
    return station_ids, X


def load_assignments(path: str | Path) -> tuple[dict[str, int], dict[int, str]]:
    """Assignments file -> (station_id -> label, label -> region name)."""
    assignment: dict[str, int] = {}
    names: dict[int, str] = {}
    for row in read_csv_dicts(path):
        label = int(row["label"])
        assignment[row["station_id"]] = label
        names[label] = row["region_name"]
    if not assignment:
        raise ConfigurationError(f"{path}: empty assignments table")
    return assignment, names


def run_cluster(
    out_dir: str | Path,
    k: int = 6,
    clean_dir: str | Path | None = None,
    profiles_path: str | Path | None = None,
    region_anchors: dict[str, str] | None = None,
) -> dict[str, int]:
    """Cluster stations into k regions; writes profiles, z-scores, tree, labels.

    Input is either a cleaned-tables directory (profiles are derived and
    written) or a ready profiles table.
    """
    out_dir = Path(out_dir)
    notes: list[str] = []
    if profiles_path is not None:
        station_ids, X = load_profiles(profiles_path)
        write_profiles(out_dir / "profiles.csv", station_ids, X)
    elif clean_dir is not None:
        clean_dir = Path(clean_dir)
        from .. import ingest

        stations = ingest.load_clean_stations(clean_dir / "stations.csv")
        daily = ingest.load_clean_measurements(clean_dir / "measurements.csv")
        profs, notes = aggregate_profiles(daily, stations)
        X, _ = profile_matrix(profs)
        station_ids = [p.station_id for p in profs]
        write_profiles(out_dir / "profiles.csv", station_ids, X)
    else:
        raise ConfigurationError("run_cluster needs clean_dir or profiles_path")

    table = standardize(X, station_ids, list(PROFILE_FEATURES))
    model = WardClustering(n_clusters=k).fit(table.values)
    assignment = {sid: int(lbl) for sid, lbl in zip(station_ids, model.labels_)}
    names = assign_region_names(assignment, region_anchors)

    write_csv(
        out_dir / "zscores.csv",
        ("station_id",) + tuple(table.feature_names),
        ([sid] + [float(v) for v in row] for sid, row in zip(station_ids, table.values)),
    )
    write_csv(
        out_dir / "assignments.csv",
        ("station_id", "label", "region_name"),
        ((sid, assignment[sid], names[assignment[sid]]) for sid in station_ids),
    )
    write_json(
        out_dir / "dendrogram.json",
        {
            "leaves": station_ids,
            "merges": [
                [int(l), int(r), float(h), int(s)] for l, r, h, s in model.linkage_
            ],
            "criterion": "ward",
            "height_scale": "euclidean",
        },
    )
    write_json(
        out_dir / "cluster_report.json",
        {
            "k": k,
            "cluster_sizes": {
                str(lbl): int(np.sum(model.labels_ == lbl)) for lbl in sorted(set(model.labels_))
            },
            "imputed_cells": [list(pair) for pair in table.imputed],
            "constant_features": table.constant_features,
            "profile_notes": notes,
            "feature_means": {f: float(v) for f, v in zip(table.feature_names, table.feature_means)},
            "feature_sds": {f: float(v) for f, v in zip(table.feature_names, table.feature_sds)},
        },
    )
    return assignment
