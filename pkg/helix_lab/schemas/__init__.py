"""
JSON schema definitions for laboratory documents.

This package contains the schemas used to validate the defaults file and
emitted report documents.
"""

from .config_schemas import DEFAULTS_SCHEMA
from .report_schemas import CASE_RECORD_SCHEMA, REPORT_SCHEMA

__all__ = [
    "CASE_RECORD_SCHEMA",
    "DEFAULTS_SCHEMA",
    "REPORT_SCHEMA",
]
