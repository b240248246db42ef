"""Core constants, models, errors and settings."""

from .errors import (
    CapExceededError,
    CertificateError,
    CorpusExhaustedError,
    DescriptorError,
    GraphFormatError,
    HelixError,
    InvalidParameterError,
    InvariantViolation,
)
from .settings import load_caps, load_defaults

__all__ = [
    "CapExceededError",
    "CertificateError",
    "CorpusExhaustedError",
    "DescriptorError",
    "GraphFormatError",
    "HelixError",
    "InvalidParameterError",
    "InvariantViolation",
    "load_caps",
    "load_defaults",
]
