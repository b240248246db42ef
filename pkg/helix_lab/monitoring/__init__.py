"""
Monitoring for the laboratory.

Standard logging everywhere, with optional Logfire export of operation spans.
"""

from .logger_utils import SpanContext, track_performance, with_monitoring
from .monitor_config import MonitoringConfig
from .monitor_types import ComponentName, LogLevel
from .setup import active_config, logfire_active, reset_monitoring, setup_from_env

__all__ = [
    # Types
    "ComponentName",
    "LogLevel",
    # Configuration
    "MonitoringConfig",
    "active_config",
    "logfire_active",
    "reset_monitoring",
    "setup_from_env",
    # Utilities
    "SpanContext",
    "track_performance",
    "with_monitoring",
]
