"""Utilities for validating documents against JSON schemas."""

from typing import Any, Dict, List

import jsonschema


def validate_schema(instance: Any, schema: Dict[str, Any]) -> List[str]:
    """
    Validate an instance against a JSON schema.

    Args:
        instance: Instance to validate
        schema: JSON schema

    Returns:
        List of validation errors, empty if valid
    """
    validator = jsonschema.Draft7Validator(schema)
    errors = []
    for error in sorted(validator.iter_errors(instance), key=lambda e: list(e.path)):
        if error.path:
            path = ".".join(str(part) for part in error.path)
            errors.append(f"At {path}: {error.message}")
        else:
            errors.append(error.message)
    return errors
