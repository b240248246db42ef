"""
Serialization utilities for reports and models.

Output is deterministic: keys are sorted and no timestamps are added, so two
runs with the same seed produce byte-identical documents.
"""

import json
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Type, TypeVar

from pydantic import BaseModel

T = TypeVar("T", bound=BaseModel)


class CustomJSONEncoder(json.JSONEncoder):
    """JSON encoder aware of enums, fractions, sets and pydantic models."""

    def default(self, obj: Any) -> Any:
        """Handle special types during JSON encoding."""
        if isinstance(obj, Enum):
            return obj.value

        if isinstance(obj, Fraction):
            return str(obj)

        if isinstance(obj, (set, frozenset)):
            return sorted(obj)

        if isinstance(obj, BaseModel):
            return obj.model_dump(mode="json")

        return super().default(obj)


def model_to_dict(
    model: BaseModel,
    exclude: Optional[List[str]] = None,
    exclude_none: bool = False,
) -> Dict[str, Any]:
    """
    Convert a Pydantic model to a JSON-compatible dictionary.

    Args:
        model: Pydantic model to convert
        exclude: Optional list of fields to exclude
        exclude_none: Whether to exclude None values

    Returns:
        Dictionary representation of the model
    """
    return model.model_dump(
        mode="json",
        exclude=set(exclude) if exclude else None,
        exclude_none=exclude_none,
    )


def model_to_json(
    model: BaseModel,
    exclude: Optional[List[str]] = None,
    exclude_none: bool = False,
    indent: Optional[int] = 2,
) -> str:
    """
    Convert a Pydantic model to a canonical JSON string.

    Args:
        model: Pydantic model to convert
        exclude: Optional list of fields to exclude
        exclude_none: Whether to exclude None values
        indent: JSON indentation

    Returns:
        JSON string with sorted keys and a trailing newline
    """
    dict_data = model_to_dict(model, exclude=exclude, exclude_none=exclude_none)
    return (
        json.dumps(
            dict_data,
            cls=CustomJSONEncoder,
            indent=indent,
            sort_keys=True,
            ensure_ascii=False,
        )
        + "\n"
    )


def json_to_model(json_str: str, model_class: Type[T]) -> T:
    """
    Convert a JSON string to a Pydantic model.

    Raises:
        ValidationError: If the JSON data does not match the model
        json.JSONDecodeError: If the JSON is invalid
    """
    return model_class.model_validate(json.loads(json_str))


def format_value(value: Any) -> str:
    """Render a parameter value as a single whitespace-free token."""
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ",".join(format_value(item) for item in value)
    text = str(value)
    return "_".join(text.split()) if text else '""'
