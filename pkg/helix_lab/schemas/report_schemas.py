"""Schema definitions for verification report documents."""

from typing import Any, Dict

CASE_RECORD_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["instance", "check", "expected", "observed", "verdict"],
    "properties": {
        "instance": {"type": "string", "minLength": 1},
        "check": {"type": "string"},
        "expected": {"type": "string"},
        "observed": {"type": "string"},
        "verdict": {
            "type": "string",
            "enum": ["pass", "fail", "indeterminate", "recorded"],
        },
        "witness": {"type": ["string", "null"]},
    },
    "additionalProperties": False,
}

REPORT_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["format_version", "suite", "parameters", "seed", "cases", "verdict"],
    "properties": {
        "format_version": {"type": "string"},
        "suite": {"type": "string", "minLength": 1},
        "parameters": {"type": "object"},
        "seed": {"type": "integer"},
        "cases": {"type": "array", "items": CASE_RECORD_SCHEMA},
        "verdict": {"type": "string", "enum": ["pass", "fail", "indeterminate"]},
    },
    "additionalProperties": False,
}
