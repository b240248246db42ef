"""Verification report and corpus models."""

from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Tuple

from pydantic import Field, model_validator

from ..constants.defaults import DEFAULT_SEED, FORMAT_VERSION
from .base_models import BaseModel, FrozenModel


class CaseVerdict(str, Enum):
    """Outcome of a single case."""

    PASS = "pass"
    FAIL = "fail"
    INDETERMINATE = "indeterminate"
    RECORDED = "recorded"


class SuiteVerdict(str, Enum):
    """Outcome of a whole suite."""

    PASS = "pass"
    FAIL = "fail"
    INDETERMINATE = "indeterminate"


class CaseRecord(FrozenModel):
    """One checked instance."""

    instance: str = Field(..., description="Replayable instance descriptor")
    check: str = Field(..., description="What was checked")
    expected: str = ""
    observed: str = ""
    verdict: CaseVerdict
    witness: Optional[str] = Field(None, description="Certificate or counterexample")

    @model_validator(mode="after")
    def validate_instance(self) -> "CaseRecord":
        if not self.instance.strip():
            raise ValueError("every case needs an instance descriptor")
        return self


def aggregate_verdict(cases: Iterable[CaseRecord]) -> SuiteVerdict:
    verdicts = {case.verdict for case in cases}
    if CaseVerdict.FAIL in verdicts:
        return SuiteVerdict.FAIL
    if CaseVerdict.INDETERMINATE in verdicts:
        return SuiteVerdict.INDETERMINATE
    return SuiteVerdict.PASS


class Report(BaseModel):
    """Result of a verification suite or probe."""

    format_version: str = FORMAT_VERSION
    suite: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    seed: int = DEFAULT_SEED
    cases: List[CaseRecord] = Field(default_factory=list)
    verdict: SuiteVerdict = SuiteVerdict.PASS

    @model_validator(mode="after")
    def validate_verdict(self) -> "Report":
        expected = aggregate_verdict(self.cases)
        if self.verdict != expected:
            raise ValueError(
                f"verdict {self.verdict.value} disagrees with cases ({expected.value})"
            )
        return self

    @classmethod
    def build(
        cls,
        suite: str,
        cases: Iterable[CaseRecord],
        parameters: Optional[Dict[str, Any]] = None,
        seed: int = DEFAULT_SEED,
    ) -> "Report":
        """Assemble a report with cases in canonical order."""
        ordered = sorted(cases, key=lambda case: (case.instance, case.check))
        return cls(
            suite=suite,
            parameters=dict(sorted((parameters or {}).items())),
            seed=seed,
            cases=ordered,
            verdict=aggregate_verdict(ordered),
        )

    @property
    def passed(self) -> bool:
        return self.verdict == SuiteVerdict.PASS

    def failures(self) -> List[CaseRecord]:
        return [case for case in self.cases if case.verdict == CaseVerdict.FAIL]


class CorpusGenerator(str, Enum):
    """Seeded graph generators."""

    GNP_ODD_GIRTH = "gnp-odd-girth"
    RANDOM_CUBIC = "random-cubic"
    FAMILY_SWEEP = "family-sweep"


class CorpusSpec(FrozenModel):
    """Parameters of a seeded corpus; generation is a pure function of it."""

    generator: CorpusGenerator
    count: int = Field(10, ge=0)
    min_order: int = Field(1, ge=0)
    max_order: int = Field(10, ge=0)
    odd_girth_floor: int = Field(3, ge=1)
    edge_probability: float = Field(0.4, ge=0.0, le=1.0)
    families: Tuple[str, ...] = Field(default=(), description="Descriptors to sweep")
    max_attempts: int = Field(10000, ge=1, description="Rejection budget")
    seed: int = DEFAULT_SEED

    @model_validator(mode="after")
    def validate_bounds(self) -> "CorpusSpec":
        if self.min_order > self.max_order:
            raise ValueError("min_order cannot exceed max_order")
        if self.odd_girth_floor % 2 == 0:
            raise ValueError("odd_girth_floor must be odd")
        if self.generator == CorpusGenerator.RANDOM_CUBIC:
            if not any(n % 2 == 0 and n >= 4 for n in self._orders()):
                raise ValueError("random-cubic needs an even order of at least 4")
        if self.generator == CorpusGenerator.FAMILY_SWEEP and not self.families:
            raise ValueError("family-sweep needs at least one descriptor")
        return self

    def _orders(self) -> range:
        return range(self.min_order, self.max_order + 1)
