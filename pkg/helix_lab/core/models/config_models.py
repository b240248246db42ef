"""Configuration models."""

from typing import Any, Dict

from pydantic import Field, model_validator

from ..constants.defaults import (
    DEFAULT_CHROMATIC_ORDER,
    DEFAULT_COLORING_GROUND_SET,
    DEFAULT_FAMILY_ORDER,
    DEFAULT_FRACTIONAL_ORDER,
    DEFAULT_HOM_COUNT_LIMIT,
    DEFAULT_ISOMORPHISM_ORDER,
    DEFAULT_LOCAL_ORDER,
    DEFAULT_SEED,
    FORMAT_VERSION,
)
from .base_models import BaseModel


class SizeCaps(BaseModel):
    """Upper bounds on instance sizes; exceeding one is an explicit error."""

    isomorphism_order: int = Field(DEFAULT_ISOMORPHISM_ORDER, ge=1)
    chromatic_order: int = Field(DEFAULT_CHROMATIC_ORDER, ge=1)
    fractional_order: int = Field(DEFAULT_FRACTIONAL_ORDER, ge=1)
    local_order: int = Field(DEFAULT_LOCAL_ORDER, ge=1)
    coloring_ground_set: int = Field(
        DEFAULT_COLORING_GROUND_SET,
        ge=1,
        description="Largest ground set of the explicit power coloring",
    )
    family_order: int = Field(DEFAULT_FAMILY_ORDER, ge=1)
    hom_count_limit: int = Field(DEFAULT_HOM_COUNT_LIMIT, ge=1)


class HarnessDefaults(BaseModel):
    """Contents of the version-controlled defaults file."""

    format_version: str = FORMAT_VERSION
    seed: int = DEFAULT_SEED
    trials: Dict[str, int] = Field(default_factory=dict)
    suites: Dict[str, Dict[str, Any]] = Field(default_factory=dict)

    @model_validator(mode="after")
    def validate_trials(self) -> "HarnessDefaults":
        for suite, count in self.trials.items():
            if count < 0:
                raise ValueError(f"trial count for {suite} must be non-negative")
        return self

    def trials_for(self, suite: str, fallback: int = 10) -> int:
        return self.trials.get(suite, fallback)

    def parameters_for(self, suite: str) -> Dict[str, Any]:
        return dict(self.suites.get(suite, {}))
