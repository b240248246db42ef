"""Monitoring types and enumerations."""

import logging
from enum import Enum


class LogLevel(str, Enum):
    """Log level enumeration."""

    DEBUG = "debug"
    INFO = "info"
    WARNING = "warning"
    ERROR = "error"
    CRITICAL = "critical"

    @property
    def numeric(self) -> int:
        return int(getattr(logging, self.name))


class ComponentName(str, Enum):
    """Laboratory component enumeration."""

    GRAPHS = "graphs"
    FAMILIES = "families"
    HOM_ENGINE = "hom_engine"
    CHROMATICS = "chromatics"
    HARNESS = "harness"
    CLI = "cli"
