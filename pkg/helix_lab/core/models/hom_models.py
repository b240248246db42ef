"""Homomorphism search models."""

from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import Field, field_validator, model_validator

from .base_models import FrozenModel
from .graph_models import Graph


class SearchMode(str, Enum):
    """What a homomorphism search should return."""

    DECIDE = "decide"
    FIRST = "first"
    COUNT = "count"


class VertexMap(FrozenModel):
    """Total map from the vertices of ``source`` to those of ``target``."""

    source: Graph
    target: Graph
    assignment: Tuple[int, ...] = Field(..., description="Image of each source vertex")

    @field_validator("assignment", mode="before")
    @classmethod
    def coerce_assignment(cls, value: object) -> Tuple[int, ...]:
        return tuple(value)  # type: ignore[call-overload]

    @model_validator(mode="after")
    def validate_totality(self) -> "VertexMap":
        if len(self.assignment) != self.source.order:
            raise ValueError(
                f"map covers {len(self.assignment)} of {self.source.order} vertices"
            )
        for v, image in enumerate(self.assignment):
            if not 0 <= image < self.target.order:
                raise ValueError(f"image {image} of vertex {v} is not a target vertex")
        return self

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def violations(self) -> List[Tuple[int, int]]:
        """Source edges whose images are not adjacent in the target."""
        target = self.target
        return [
            (u, v)
            for u, v in self.source.edges()
            if not target.adjacent(self.assignment[u], self.assignment[v])
        ]

    def with_endpoints(self, source: Graph, target: Graph) -> "VertexMap":
        """Same assignment viewed between other graphs on the same vertex sets."""
        return VertexMap(source=source, target=target, assignment=self.assignment)

    def compose(self, after: "VertexMap") -> "VertexMap":
        """``after`` applied to the image of this map."""
        if after.source.order != self.target.order:
            raise ValueError("maps do not compose")
        return VertexMap(
            source=self.source,
            target=after.target,
            assignment=tuple(after.assignment[x] for x in self.assignment),
        )

    def as_dict(self) -> Dict[int, int]:
        return dict(enumerate(self.assignment))


class HomSearchResult(FrozenModel):
    """Outcome of one homomorphism search."""

    mode: SearchMode
    exists: bool
    witness: Optional[VertexMap] = None
    count: Optional[int] = Field(None, ge=0)
    saturated: bool = Field(False, description="Count stopped at the limit")
    nodes: int = Field(0, ge=0, description="Search nodes expanded")

    @model_validator(mode="after")
    def validate_result(self) -> "HomSearchResult":
        if self.mode == SearchMode.FIRST and self.exists and self.witness is None:
            raise ValueError("first mode needs a witness when a map exists")
        if self.mode == SearchMode.COUNT and self.count is None:
            raise ValueError("count mode needs a count")
        return self
