"""Utility functions for the laboratory."""

from .bitsets import (
    full_mask,
    iter_bits,
    lowest_bit,
    mask_of,
    popcount,
    subset_elements,
    subset_mask,
)
from .schema_utils import validate_schema
from .serialization import (
    CustomJSONEncoder,
    format_value,
    json_to_model,
    model_to_dict,
    model_to_json,
)
from .version import is_compatible_version, supported_range

__all__ = [
    # Bitsets
    "full_mask",
    "iter_bits",
    "lowest_bit",
    "mask_of",
    "popcount",
    "subset_elements",
    "subset_mask",
    # Schema utilities
    "validate_schema",
    # Serialization
    "CustomJSONEncoder",
    "format_value",
    "json_to_model",
    "model_to_dict",
    "model_to_json",
    # Versioning
    "is_compatible_version",
    "supported_range",
]
