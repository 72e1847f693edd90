"""Artifact bundle layout and manifest hashing."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from ..exceptions import BundleError
from ..tableio import write_json

SCHEMA_VERSION = "1"
MANIFEST_NAME = "manifest.json"

#: files every complete bundle must contain
REQUIRED_FILES = (
    "clean/stations.csv",
    "clean/measurements.csv",
    "clean/forecasts.csv",
    "cleaning_report.json",
    "profiles.csv",
    "zscores.csv",
    "assignments.csv",
    "dendrogram.json",
    "cluster_report.json",
    "error_cells.csv",
    "correlations.csv",
    "importance.csv",
    "glyphs.json",
    "config.json",
)


def _sha256(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


def bundle_files(bundle_dir: Path) -> list[str]:
    return sorted(
        str(p.relative_to(bundle_dir))
        for p in bundle_dir.rglob("*")
        if p.is_file() and p.name != MANIFEST_NAME
    )


def write_manifest(
    bundle_dir: str | Path,
    valid: bool = True,
    failed_stage: str | None = None,
) -> dict:
    bundle_dir = Path(bundle_dir)
    manifest = {
        "schema_version": SCHEMA_VERSION,
        "valid": valid,
        "failed_stage": failed_stage,
        "files": {rel: _sha256(bundle_dir / rel) for rel in bundle_files(bundle_dir)},
    }
    write_json(bundle_dir / MANIFEST_NAME, manifest)
    return manifest


def load_manifest(bundle_dir: str | Path) -> dict:
    path = Path(bundle_dir) / MANIFEST_NAME
    if not path.exists():
        raise BundleError(f"{bundle_dir}: no {MANIFEST_NAME}; not an artifact bundle")
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise BundleError(f"{path}: unreadable manifest: {exc}")


def verify_bundle(bundle_dir: str | Path) -> dict:
    """Check manifest validity and that every hashed file is intact."""
    bundle_dir = Path(bundle_dir)
    manifest = load_manifest(bundle_dir)
    if not manifest.get("valid", False):
        raise BundleError(
            f"{bundle_dir}: bundle marked invalid "
            f"(failed stage: {manifest.get('failed_stage')})"
        )
    files = manifest.get("files", {})
    missing = [rel for rel in REQUIRED_FILES if rel not in files]
    if missing:
        raise BundleError(f"{bundle_dir}: manifest missing required files {missing}")
    for rel, digest in sorted(files.items()):
        path = bundle_dir / rel
        if not path.exists():
            raise BundleError(f"{bundle_dir}: file {rel} listed in manifest is missing")
        actual = _sha256(path)
        if actual != digest:
            raise BundleError(
                f"{bundle_dir}: hash mismatch for {rel}: manifest {digest[:12]}.., "
                f"file {actual[:12]}.."
            )
    return manifest
