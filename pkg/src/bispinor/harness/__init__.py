"""Verification harness: suite configuration, the check registry, report
serialization and the tabular exporters behind the CLI."""

from .config import ConfigError, SuiteConfig
from .report import ConformanceReport, ReportEntry
from .checks import run_all

__all__ = [
    "ConfigError",
    "SuiteConfig",
    "ConformanceReport",
    "ReportEntry",
    "run_all",
]
