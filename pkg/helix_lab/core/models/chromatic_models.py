"""Chromatic parameter models."""

from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple, Union

from pydantic import Field, model_validator

from .base_models import FrozenModel
from .hom_models import VertexMap


class Rational(FrozenModel):
    """Exact fraction in lowest terms."""

    numerator: int
    denominator: int = Field(1, ge=1)

    @model_validator(mode="after")
    def validate_lowest_terms(self) -> "Rational":
        if gcd(abs(self.numerator), self.denominator) != 1 and self.numerator != 0:
            raise ValueError(f"{self.numerator}/{self.denominator} is not reduced")
        if self.numerator == 0 and self.denominator != 1:
            raise ValueError("zero must be written 0/1")
        return self

    @classmethod
    def of(cls, value: Union[int, Fraction, "Rational"]) -> "Rational":
        if isinstance(value, Rational):
            return value
        fraction = Fraction(value)
        return cls(numerator=fraction.numerator, denominator=fraction.denominator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"

    def __lt__(self, other: "Rational") -> bool:
        return self.fraction < Rational.of(other).fraction

    def __le__(self, other: "Rational") -> bool:
        return self.fraction <= Rational.of(other).fraction


class ChromaticResult(FrozenModel):
    """Value of a chromatic parameter with its certificate.

    When ``exact`` is false only ``lower``/``upper`` are meaningful; a
    ``lower_strict`` bound excludes the lower value itself.
    """

    parameter: str = Field(..., description="chromatic, circular, fractional or local")
    value: Optional[Rational] = None
    exact: bool = True
    lower: Optional[Rational] = None
    upper: Optional[Rational] = None
    lower_strict: bool = False
    certificate: Optional[VertexMap] = None
    weights: Tuple[Tuple[Tuple[int, ...], Rational], ...] = Field(
        default=(), description="Independent set weights of a fractional cover"
    )
    refuted: Tuple[str, ...] = Field(
        default=(), description="Values refuted by exhaustive search"
    )

    @model_validator(mode="after")
    def validate_result(self) -> "ChromaticResult":
        if self.exact and self.value is None:
            raise ValueError("an exact result needs a value")
        if not self.exact and self.upper is None:
            raise ValueError("an inexact result needs an upper bound")
        if self.exact:
            if self.lower is not None and self.lower != self.value:
                raise ValueError("exact lower bound must equal the value")
            if self.upper is not None and self.upper != self.value:
                raise ValueError("exact upper bound must equal the value")
        return self

    @property
    def integer_value(self) -> int:
        if self.value is None or self.value.denominator != 1:
            raise ValueError(f"{self.parameter} value is not an integer")
        return self.value.numerator

    def summary(self) -> str:
        if self.exact:
            return str(self.value)
        bracket = "(" if self.lower_strict else "["
        low = str(self.lower) if self.lower is not None else "?"
        return f"{bracket}{low}, {self.upper}]"


class CriticalityReport(FrozenModel):
    """Per-vertex deletion results of a vertex-criticality probe."""

    chromatic_number: Optional[int] = Field(None, ge=0)
    deletions: Tuple[Optional[int], ...] = Field(
        default=(), description="chi(G - v) per vertex, None when not computed"
    )
    dominated: Tuple[int, ...] = Field(
        default=(), description="Vertices whose neighbourhood is contained in another"
    )
    critical: bool
    witness_vertex: Optional[int] = Field(
        None, description="A vertex whose deletion keeps the chromatic number"
    )

    @model_validator(mode="after")
    def validate_verdict(self) -> "CriticalityReport":
        if not self.critical and self.witness_vertex is None:
            raise ValueError("a non-critical verdict needs a witness vertex")
        if self.critical and self.witness_vertex is not None:
            raise ValueError("a critical verdict has no witness vertex")
        return self

    def non_critical_vertices(self) -> List[int]:
        return sorted(
            set(self.dominated)
            | {
                v
                for v, value in enumerate(self.deletions)
                if value is not None and value == self.chromatic_number
            }
        )
