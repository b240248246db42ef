"""Assertion helpers for certificates and models."""

from typing import Any, Dict, Optional, Sequence, Type, TypeVar

from pydantic import BaseModel, ValidationError

from helix_lab.core.models.graph_models import Graph
from helix_lab.core.models.hom_models import VertexMap

ModelT = TypeVar("ModelT", bound=BaseModel)


def assert_model_validation(
    model_cls: Type[ModelT], data: Dict[str, Any], expect_success: bool = True
) -> Optional[ModelT]:
    """Validate ``data`` and check the outcome matches ``expect_success``."""
    try:
        model = model_cls.model_validate(data)
    except ValidationError as e:
        assert not expect_success, f"expected valid data, got: {e}"
        return None
    assert expect_success, f"expected a validation error, got {model!r}"
    return model


def assert_homomorphism(f: VertexMap) -> None:
    bad = f.violations()
    assert not bad, f"{f.source.describe()} -> {f.target.describe()} breaks {bad[:5]}"


def assert_proper_coloring(g: Graph, colors: Sequence[int], limit: int) -> None:
    assert len(colors) == g.order
    assert all(0 <= c < limit for c in colors), f"colours outside 0..{limit - 1}"
    for u, v in g.edges():
        assert colors[u] != colors[v], f"edge ({u}, {v}) is monochromatic"
