"""Common error definitions for laboratory operations."""

from typing import Any, Dict, Optional

from .constants.error_codes import (
    ERROR_CODES,
    EXIT_CAP_EXCEEDED,
    EXIT_FAIL,
    EXIT_USAGE,
)


class HelixError(Exception):
    """Base class for all laboratory errors."""

    def __init__(
        self,
        message: str,
        code: str = "helix_error",
        exit_status: int = EXIT_FAIL,
        details: Optional[Dict[str, Any]] = None,
    ):
        self.message = message
        self.code = code
        self.exit_status = exit_status
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert error to dictionary format."""
        return {
            "code": self.code,
            "description": ERROR_CODES.get(self.code, ""),
            "message": self.message,
            "details": self.details,
        }


class InvalidParameterError(HelixError):
    """Raised when parameters or preconditions of an operation are violated."""

    def __init__(
        self,
        message: str,
        parameter: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(
            message=message,
            code="invalid_parameter",
            exit_status=EXIT_USAGE,
            details={
                "parameter": parameter,
                **(details or {}),
            },
        )


class DescriptorError(InvalidParameterError):
    """Raised when a family descriptor cannot be parsed."""

    def __init__(self, message: str, descriptor: str):
        super().__init__(
            message=message,
            parameter="descriptor",
            details={"descriptor": descriptor},
        )
        self.code = "descriptor_error"


class GraphFormatError(HelixError):
    """Raised when an HGF document is malformed."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(
            message=f"{prefix}{message}",
            code="graph_format_error",
            exit_status=EXIT_USAGE,
            details={"line": line_number},
        )
        self.line_number = line_number


class CapExceededError(HelixError):
    """Raised when an instance is larger than a configured size cap."""

    def __init__(self, cap: str, limit: int, actual: int):
        super().__init__(
            message=f"instance too large: {cap} is {actual}, cap is {limit}",
            code="cap_exceeded",
            exit_status=EXIT_CAP_EXCEEDED,
            details={"cap": cap, "limit": limit, "actual": actual},
        )
        self.cap = cap
        self.limit = limit
        self.actual = actual


class CertificateError(HelixError):
    """Raised when a supplied map is not a homomorphism or coloring."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            code="certificate_error",
            exit_status=EXIT_USAGE,
            details=details,
        )


class InvariantViolation(HelixError):
    """Raised when a postcondition guaranteed by a proof does not hold."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            code="invariant_violation",
            exit_status=EXIT_FAIL,
            details=details,
        )


class CorpusExhaustedError(HelixError):
    """Raised when a corpus generator runs out of rejection budget."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            code="corpus_exhausted",
            exit_status=EXIT_USAGE,
            details=details,
        )
