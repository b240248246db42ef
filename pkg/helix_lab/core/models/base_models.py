"""Base models for the laboratory."""

from pydantic import BaseModel as PydanticBaseModel
from pydantic import ConfigDict


class BaseModel(PydanticBaseModel):
    """Base model with common configuration."""

    model_config = ConfigDict(
        extra="forbid",  # Forbid extra attributes
        validate_assignment=True,  # Validate when attributes are assigned
        arbitrary_types_allowed=True,  # Allow Fraction and similar values
        populate_by_name=True,  # Allow populating by field name
    )


class FrozenModel(PydanticBaseModel):
    """Immutable value object; safe to share between callers."""

    model_config = ConfigDict(
        extra="forbid",
        frozen=True,
        arbitrary_types_allowed=True,
        populate_by_name=True,
    )
