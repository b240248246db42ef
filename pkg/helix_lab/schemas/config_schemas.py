"""
Schema definitions for the harness defaults file.

The defaults file fixes seeds, trial counts and suite parameters so that
verification runs are reproducible.
"""

from typing import Any, Dict

# Schema for helix_lab/config/defaults.json
DEFAULTS_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["format_version", "seed", "trials", "suites"],
    "properties": {
        "format_version": {
            "type": "string",
            "pattern": r"^\d+\.\d+\.\d+$",
            "description": "Version of the defaults file layout",
        },
        "seed": {
            "type": "integer",
            "minimum": 0,
            "description": "Seed used when a command does not pass one",
        },
        "trials": {
            "type": "object",
            "additionalProperties": {"type": "integer", "minimum": 0},
            "description": "Corpus size per suite",
        },
        "suites": {
            "type": "object",
            "additionalProperties": {"type": "object"},
            "description": "Default parameters per suite",
        },
    },
    "additionalProperties": False,
}
