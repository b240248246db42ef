"""Loading of size caps and harness defaults."""

import json
import logging
import os
from functools import lru_cache
from importlib import resources
from typing import Any, Dict, Optional

from pydantic import ValidationError

from ..schemas.config_schemas import DEFAULTS_SCHEMA
from ..utils.schema_utils import validate_schema
from ..utils.version import is_compatible_version
from .constants.defaults import (
    CAPS_ENV_VAR,
    MAX_SUPPORTED_FORMAT_VERSION,
    MIN_SUPPORTED_FORMAT_VERSION,
)
from .errors import InvalidParameterError
from .models.config_models import HarnessDefaults, SizeCaps

logger = logging.getLogger(__name__)


def parse_caps(text: str) -> Dict[str, int]:
    """Parse ``name=value,name=value`` into cap overrides."""
    overrides: Dict[str, int] = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in SizeCaps.model_fields:
            raise InvalidParameterError(
                f"unknown size cap entry {item!r}", parameter=CAPS_ENV_VAR
            )
        try:
            overrides[name] = int(value)
        except ValueError as exc:
            raise InvalidParameterError(
                f"size cap {name} needs an integer, got {value!r}",
                parameter=CAPS_ENV_VAR,
            ) from exc
    return overrides


def load_caps(environ: Optional[Dict[str, str]] = None) -> SizeCaps:
    """Default caps with overrides from the ``HELIX_CAPS`` variable."""
    env = os.environ if environ is None else environ
    text = env.get(CAPS_ENV_VAR, "")
    overrides = parse_caps(text) if text else {}
    try:
        caps = SizeCaps(**overrides)
    except ValidationError as exc:
        raise InvalidParameterError(
            f"invalid size caps: {exc.errors()[0]['msg']}", parameter=CAPS_ENV_VAR
        ) from exc
    if overrides:
        logger.debug("size caps overridden: %s", overrides)
    return caps


def validate_defaults(data: Dict[str, Any]) -> HarnessDefaults:
    errors = validate_schema(data, DEFAULTS_SCHEMA)
    if errors:
        raise InvalidParameterError(
            f"defaults file is invalid: {errors[0]}",
            parameter="defaults",
            details={"errors": errors},
        )
    fmt = data["format_version"]
    if not is_compatible_version(
        fmt, MIN_SUPPORTED_FORMAT_VERSION, MAX_SUPPORTED_FORMAT_VERSION
    ):
        raise InvalidParameterError(
            f"unsupported defaults format version {fmt}", parameter="format_version"
        )
    return HarnessDefaults(**data)


@lru_cache(maxsize=1)
def load_defaults() -> HarnessDefaults:
    """Read the packaged ``config/defaults.json``."""
    text = (
        resources.files("helix_lab")
        .joinpath("config/defaults.json")
        .read_text(encoding="utf-8")
    )
    return validate_defaults(json.loads(text))
