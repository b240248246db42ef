"""
Common test fixtures.

Small named graphs, tight size caps and a clean monitoring state shared by the
unit and integration suites.
"""

from typing import Callable, Iterator

import pytest

from helix_lab.core.models.config_models import SizeCaps
from helix_lab.core.models.graph_models import Graph
from helix_lab.graphs import complete, cycle, hypercube, petersen
from helix_lab.monitoring import reset_monitoring


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """No cap overrides or Logfire token leak in from the developer shell."""
    monkeypatch.delenv("HELIX_CAPS", raising=False)
    monkeypatch.delenv("LOGFIRE_TOKEN", raising=False)
    reset_monitoring()
    yield
    reset_monitoring()


# Graph fixtures
@pytest.fixture
def pentagon() -> Graph:
    return cycle(5)


@pytest.fixture
def nonagon() -> Graph:
    return cycle(9)


@pytest.fixture
def square() -> Graph:
    return cycle(4)


@pytest.fixture
def triangle() -> Graph:
    return complete(3)


@pytest.fixture
def k4() -> Graph:
    return complete(4)


@pytest.fixture
def petersen_graph() -> Graph:
    return petersen()


@pytest.fixture
def cube() -> Graph:
    return hypercube(3)


@pytest.fixture
def path3() -> Graph:
    """The path 0 - 1 - 2."""
    return Graph.from_edges(3, [(0, 1), (1, 2)], name="path3")


@pytest.fixture
def looped_vertex() -> Graph:
    return Graph(order=1, rows=(1,), name="loop")


# Configuration fixtures
@pytest.fixture
def caps() -> SizeCaps:
    return SizeCaps()


@pytest.fixture
def tiny_caps() -> SizeCaps:
    """Caps small enough that ordinary instances exceed them."""
    return SizeCaps(
        isomorphism_order=4,
        chromatic_order=4,
        fractional_order=4,
        local_order=4,
        coloring_ground_set=8,
        family_order=8,
        hom_count_limit=5,
    )


@pytest.fixture
def graph_factory() -> Callable[..., Graph]:
    """Build an unnamed graph from an edge list."""

    def _create(order: int, edges: list, **kwargs: object) -> Graph:
        return Graph.from_edges(order, edges, **kwargs)  # type: ignore[arg-type]

    return _create
