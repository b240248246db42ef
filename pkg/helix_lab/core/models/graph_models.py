"""Graph data models."""

from typing import Any, Iterable, List, Optional, Sequence, Tuple, Union

from pydantic import Field, field_validator, model_validator

from ...utils.bitsets import iter_bits, mask_of, popcount
from .base_models import FrozenModel

# A structured label is a tuple of 1-based subsets, e.g. ((1, 3), (4, 5, 6, 7)).
SetTupleLabel = Tuple[Tuple[int, ...], ...]
VertexLabel = Union[SetTupleLabel, str]


def _normalize_label(label: Any) -> VertexLabel:
    if isinstance(label, str):
        if not label or any(ch.isspace() for ch in label):
            raise ValueError(
                f"text label must be non-empty without whitespace: {label!r}"
            )
        if label.startswith("("):
            raise ValueError(f"text label cannot start with '(': {label!r}")
        return label
    if isinstance(label, (list, tuple)):
        parts = []
        for part in label:
            if not isinstance(part, (list, tuple, set, frozenset)):
                raise ValueError(f"label component must be a set of integers: {part!r}")
            elements = tuple(sorted(int(x) for x in part))
            if any(x < 1 for x in elements) or len(set(elements)) != len(elements):
                raise ValueError(
                    f"label component must hold distinct positive integers: {part!r}"
                )
            parts.append(elements)
        if not parts:
            raise ValueError("structured label needs at least one component")
        return tuple(parts)
    raise ValueError(f"unsupported label type: {type(label).__name__}")


class Graph(FrozenModel):
    """Finite undirected graph with optional loops and vertex labels.

    ``rows[v]`` is the neighbourhood bitset of vertex ``v``; bit ``v`` in
    ``rows[v]`` is a loop.
    """

    order: int = Field(..., ge=0, description="Number of vertices, indexed 0..order-1")
    rows: Tuple[Any, ...] = Field(..., description="Neighbourhood bitset per vertex")
    labels: Optional[Tuple[Any, ...]] = Field(None, description="Per-vertex labels")
    name: Optional[str] = Field(
        None, description="Family descriptor or derived expression"
    )

    @field_validator("rows", mode="before")
    @classmethod
    def validate_rows(cls, value: Any) -> Tuple[int, ...]:
        rows = tuple(value)
        for row in rows:
            if not isinstance(row, int) or isinstance(row, bool) or row < 0:
                raise ValueError("rows must be non-negative integer bitsets")
        return rows

    @field_validator("labels", mode="before")
    @classmethod
    def validate_labels(cls, value: Any) -> Optional[Tuple[VertexLabel, ...]]:
        if value is None:
            return None
        return tuple(_normalize_label(label) for label in value)

    @model_validator(mode="after")
    def validate_structure(self) -> "Graph":
        """Check indices, symmetry and label consistency."""
        if len(self.rows) != self.order:
            raise ValueError(f"expected {self.order} rows, got {len(self.rows)}")
        limit = 1 << self.order
        for v, row in enumerate(self.rows):
            if row >= limit:
                raise ValueError(
                    f"vertex {v} references an index outside 0..{self.order - 1}"
                )
            for u in iter_bits(row):
                if not (self.rows[u] >> v) & 1:
                    raise ValueError(f"adjacency is not symmetric between {v} and {u}")
        if self.labels is not None:
            if len(self.labels) != self.order:
                raise ValueError("every vertex needs exactly one label")
            if len(set(self.labels)) != len(self.labels):
                raise ValueError("labels must be pairwise distinct")
        return self

    @classmethod
    def from_edges(
        cls,
        order: int,
        edges: Iterable[Tuple[int, int]],
        labels: Optional[Sequence[Any]] = None,
        name: Optional[str] = None,
    ) -> "Graph":
        rows = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) outside 0..{order - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(
            order=order,
            rows=tuple(rows),
            labels=tuple(labels) if labels is not None else None,
            name=name,
        )

    def neighbors(self, v: int) -> int:
        return self.rows[v]

    def neighbor_list(self, v: int) -> List[int]:
        return list(iter_bits(self.rows[v]))

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def has_loop(self, v: int) -> bool:
        return self.adjacent(v, v)

    @property
    def has_loops(self) -> bool:
        return any(self.has_loop(v) for v in range(self.order))

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    @property
    def all_vertices(self) -> int:
        return (1 << self.order) - 1

    def edges(self) -> List[Tuple[int, int]]:
        """Edges ``(i, j)`` with ``i <= j`` in lexicographic order."""
        result = []
        for i, row in enumerate(self.rows):
            for j in iter_bits(row >> i):
                result.append((i, i + j))
        return result

    @property
    def edge_count(self) -> int:
        loops = sum(1 for v in range(self.order) if self.has_loop(v))
        return (sum(popcount(row) for row in self.rows) + loops) // 2

    def label(self, v: int) -> Optional[VertexLabel]:
        return self.labels[v] if self.labels is not None else None

    def index_of(self, label: Any) -> int:
        """Vertex index carrying ``label``."""
        if self.labels is None:
            raise KeyError("graph has no labels")
        wanted = _normalize_label(label)
        try:
            return self.labels.index(wanted)
        except ValueError as exc:
            raise KeyError(f"no vertex labelled {label!r}") from exc

    def induced(self, vertices: Iterable[int], name: Optional[str] = None) -> "Graph":
        """Induced subgraph on ``vertices``, kept in ascending index order."""
        keep = sorted(set(vertices))
        position = {v: i for i, v in enumerate(keep)}
        keep_mask = mask_of(keep)
        rows = []
        for v in keep:
            kept = iter_bits(self.rows[v] & keep_mask)
            rows.append(mask_of(position[u] for u in kept))
        labels = None
        if self.labels is not None:
            labels = tuple(self.labels[v] for v in keep)
        return Graph(order=len(keep), rows=tuple(rows), labels=labels, name=name)

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced((u for u in range(self.order) if u != v), name=None)

    def same_adjacency(self, other: "Graph") -> bool:
        return self.order == other.order and self.rows == other.rows

    def describe(self) -> str:
        return self.name or f"<graph order={self.order}>"


class CycleStats(FrozenModel):
    """Girth statistics; ``None`` stands for infinity."""

    girth: Optional[int] = Field(None, ge=1)
    odd_girth: Optional[int] = Field(None, ge=1)

    @model_validator(mode="after")
    def validate_girths(self) -> "CycleStats":
        if self.odd_girth is not None:
            if self.odd_girth % 2 == 0:
                raise ValueError("odd girth must be odd")
            if self.girth is None or self.girth > self.odd_girth:
                raise ValueError("girth cannot exceed odd girth")
        if (self.girth == 1) != (self.odd_girth == 1):
            raise ValueError("a loop forces girth and odd girth to be 1")
        return self

    @property
    def is_bipartite(self) -> bool:
        return self.odd_girth is None
