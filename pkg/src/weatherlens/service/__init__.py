"""Service stage: pipeline orchestration and the read-only HTTP API."""

from .app import BundleState, create_server, serve
from .bundle import (
    MANIFEST_NAME,
    REQUIRED_FILES,
    SCHEMA_VERSION,
    load_manifest,
    verify_bundle,
    write_manifest,
)
from .config import PipelineConfig
from .pipeline import STAGES, pipeline_run

__all__ = [
    "PipelineConfig",
    "pipeline_run",
    "STAGES",
    "create_server",
    "serve",
    "BundleState",
    "write_manifest",
    "load_manifest",
    "verify_bundle",
    "SCHEMA_VERSION",
    "MANIFEST_NAME",
    "REQUIRED_FILES",
]
