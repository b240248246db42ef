"""Constants used across the laboratory."""

from .defaults import (
    CAPS_ENV_VAR,
    DEFAULT_CHROMATIC_ORDER,
    DEFAULT_COLORING_GROUND_SET,
    DEFAULT_FAMILY_ORDER,
    DEFAULT_FRACTIONAL_ORDER,
    DEFAULT_HOM_COUNT_LIMIT,
    DEFAULT_ISOMORPHISM_ORDER,
    DEFAULT_LOCAL_ORDER,
    DEFAULT_SEED,
    FORMAT_VERSION,
    LOGFIRE_TOKEN_ENV_VAR,
    MAX_SUPPORTED_FORMAT_VERSION,
    MIN_SUPPORTED_FORMAT_VERSION,
)
from .error_codes import (
    ERROR_CODES,
    EXIT_CAP_EXCEEDED,
    EXIT_FAIL,
    EXIT_PASS,
    EXIT_USAGE,
)
from .family_kinds import FAMILY_ARITY, FamilyKind

__all__ = [
    "CAPS_ENV_VAR",
    "DEFAULT_CHROMATIC_ORDER",
    "DEFAULT_COLORING_GROUND_SET",
    "DEFAULT_FAMILY_ORDER",
    "DEFAULT_FRACTIONAL_ORDER",
    "DEFAULT_HOM_COUNT_LIMIT",
    "DEFAULT_ISOMORPHISM_ORDER",
    "DEFAULT_LOCAL_ORDER",
    "DEFAULT_SEED",
    "FORMAT_VERSION",
    "LOGFIRE_TOKEN_ENV_VAR",
    "MAX_SUPPORTED_FORMAT_VERSION",
    "MIN_SUPPORTED_FORMAT_VERSION",
    "ERROR_CODES",
    "EXIT_CAP_EXCEEDED",
    "EXIT_FAIL",
    "EXIT_PASS",
    "EXIT_USAGE",
    "FAMILY_ARITY",
    "FamilyKind",
]
