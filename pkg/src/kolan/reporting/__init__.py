"""Configuration, artifact writers, charts, report bundle and CLI."""

from .config import RunConfig, build_config, load_config_file, parse_config_text
from .report import (
    SCHEMA_VERSION,
    ReportBundle,
    metrics_section,
    pca_section,
    render_summary,
    sentiment_section,
)

__all__ = [
    "SCHEMA_VERSION",
    "ReportBundle",
    "RunConfig",
    "build_config",
    "load_config_file",
    "metrics_section",
    "parse_config_text",
    "pca_section",
    "render_summary",
    "sentiment_section",
]
