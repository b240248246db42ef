"""Models for family vertices, descriptors and reduction traces."""

from typing import Any, List, Tuple

from pydantic import Field, field_validator, model_validator

from ..constants.family_kinds import FAMILY_ARITY, FamilyKind
from .base_models import FrozenModel


def circular_gap_ok(elements: Tuple[int, ...], m: int) -> bool:
    """True when distinct elements satisfy ``2 <= |x - y| <= m - 2``."""
    for i, x in enumerate(elements):
        for y in elements[i + 1 :]:
            if not 2 <= abs(x - y) <= m - 2:
                return False
    return True


class StableSubset(FrozenModel):
    """A 2-stable subset of the cyclically ordered ground set ``{1..m}``."""

    elements: Tuple[int, ...] = Field(..., description="Sorted 1-based elements")
    m: int = Field(..., ge=1, description="Ground set size")

    @field_validator("elements", mode="before")
    @classmethod
    def sort_elements(cls, value: object) -> Tuple[int, ...]:
        return tuple(sorted(value))  # type: ignore[call-overload]

    @model_validator(mode="after")
    def validate_stability(self) -> "StableSubset":
        if any(not 1 <= x <= self.m for x in self.elements):
            raise ValueError(f"elements must lie in 1..{self.m}")
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("elements must be distinct")
        if not circular_gap_ok(self.elements, self.m):
            raise ValueError(f"{self.elements} is not 2-stable in 1..{self.m}")
        return self


class HelicalVertex(FrozenModel):
    """A tuple ``(A_1, ..., A_k)`` of subsets of ``{1..m}``."""

    sets: Tuple[Tuple[int, ...], ...] = Field(..., description="Coordinates A_1..A_k")
    m: int = Field(..., ge=1)
    n: int = Field(..., ge=1)
    k: int = Field(..., ge=1)

    @field_validator("sets", mode="before")
    @classmethod
    def sort_sets(cls, value: Any) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(sorted(part)) for part in value)

    @model_validator(mode="after")
    def validate_helical(self) -> "HelicalVertex":
        """Check sizes, consecutive disjointness and two-step nesting."""
        if len(self.sets) != self.k:
            raise ValueError(f"expected {self.k} coordinates, got {len(self.sets)}")
        as_sets = [frozenset(part) for part in self.sets]
        for part in as_sets:
            if any(not 1 <= x <= self.m for x in part):
                raise ValueError(f"coordinate {sorted(part)} leaves 1..{self.m}")
        if len(as_sets[0]) != self.n:
            raise ValueError(f"|A_1| must be {self.n}")
        if any(len(part) < self.n for part in as_sets):
            raise ValueError(f"every coordinate needs at least {self.n} elements")
        for s in range(self.k - 1):
            if as_sets[s] & as_sets[s + 1]:
                raise ValueError(f"A_{s + 1} and A_{s + 2} intersect")
        for t in range(self.k - 2):
            if not as_sets[t] <= as_sets[t + 2]:
                raise ValueError(f"A_{t + 1} is not contained in A_{t + 3}")
        return self

    @property
    def first(self) -> Tuple[int, ...]:
        return self.sets[0]


class FamilyDescriptor(FrozenModel):
    """Parsed family descriptor such as ``KG:5,2``."""

    kind: FamilyKind
    params: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def validate_arity(self) -> "FamilyDescriptor":
        expected = FAMILY_ARITY[self.kind]
        if len(self.params) != expected:
            raise ValueError(
                f"{self.kind.value} takes {expected} parameters, got {len(self.params)}"
            )
        return self

    @property
    def canonical(self) -> str:
        if not self.params:
            return self.kind.value
        return f"{self.kind.value}:{','.join(str(p) for p in self.params)}"

    def __str__(self) -> str:
        return self.canonical


class ReductionTrace(FrozenModel):
    """Record of a dominated-vertex elimination run.

    Indices refer to the input graph. ``retraction[v]`` is the survivor that
    ``v`` is folded onto; survivors map to themselves.
    """

    removed: Tuple[Tuple[int, int], ...] = Field(
        default=(), description="(removed vertex, dominating witness) in order"
    )
    survivors: Tuple[int, ...] = Field(..., description="Surviving input vertices")
    retraction: Tuple[int, ...] = Field(..., description="Input vertex -> survivor")

    @model_validator(mode="after")
    def validate_trace(self) -> "ReductionTrace":
        alive = set(self.survivors)
        removed = [u for u, _ in self.removed]
        if alive & set(removed):
            raise ValueError("a vertex cannot be both removed and surviving")
        if len(alive) + len(removed) != len(self.retraction):
            raise ValueError("every input vertex must be removed or survive")
        for v, image in enumerate(self.retraction):
            if image not in alive:
                raise ValueError(f"vertex {v} retracts onto non-survivor {image}")
            if v in alive and image != v:
                raise ValueError(f"survivor {v} must be fixed by the retraction")
        return self

    def removed_vertices(self) -> List[int]:
        return [u for u, _ in self.removed]
