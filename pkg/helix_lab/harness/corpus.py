"""Seeded graph corpora.

Generation is a pure function of the :class:`CorpusSpec`: one
``random.Random(seed)`` stream drives every choice, so the same spec always
yields the same graphs in the same order.
"""

import logging
import random
from itertools import combinations
from typing import List, Optional, Tuple

from ..core.errors import CorpusExhaustedError
from ..core.models.config_models import SizeCaps
from ..core.models.graph_models import Graph
from ..core.models.report_models import CorpusGenerator, CorpusSpec
from ..graphs.families import build_family
from ..graphs.operators import odd_girth
from ..monitoring import ComponentName, with_monitoring

logger = logging.getLogger(__name__)


def corpus_name(spec: CorpusSpec, index: int) -> str:
    """Replayable name of the ``index``-th corpus graph."""
    return (
        f"{spec.generator.value}/s{spec.seed}/og{spec.odd_girth_floor}"
        f"/n{spec.min_order}-{spec.max_order}/{index}"
    )


def meets_floor(g: Graph, floor: int) -> bool:
    og = odd_girth(g)
    return og is None or og >= floor


class _Budget:
    def __init__(self, spec: CorpusSpec):
        self.spec = spec
        self.attempts = 0

    def spend(self, produced: int) -> None:
        self.attempts += 1
        if self.attempts > self.spec.max_attempts:
            raise CorpusExhaustedError(
                f"{self.spec.generator.value} corpus produced {produced} of "
                f"{self.spec.count} graphs in {self.spec.max_attempts} attempts; "
                "lower the odd-girth floor, the edge probability or the order, "
                "or raise max_attempts",
                details={"seed": self.spec.seed, "produced": produced},
            )


def _gnp_edges(rng: random.Random, n: int, p: float) -> List[Tuple[int, int]]:
    return [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p]


def _pairing_edges(rng: random.Random, n: int) -> Optional[List[Tuple[int, int]]]:
    """One pairing-model sample of a cubic multigraph, ``None`` if not simple."""
    points = [v for v in range(n) for _ in range(3)]
    rng.shuffle(points)
    edges = set()
    for a, b in zip(points[::2], points[1::2]):
        edge = (min(a, b), max(a, b))
        if a == b or edge in edges:
            return None
        edges.add(edge)
    return sorted(edges)


def _gnp_odd_girth(spec: CorpusSpec, rng: random.Random) -> List[Graph]:
    graphs: List[Graph] = []
    budget = _Budget(spec)
    while len(graphs) < spec.count:
        budget.spend(len(graphs))
        n = rng.randint(spec.min_order, spec.max_order)
        g = Graph.from_edges(
            n,
            _gnp_edges(rng, n, spec.edge_probability),
            name=corpus_name(spec, len(graphs)),
        )
        if meets_floor(g, spec.odd_girth_floor):
            graphs.append(g)
    return graphs


def _random_cubic(spec: CorpusSpec, rng: random.Random) -> List[Graph]:
    orders = [
        n for n in range(spec.min_order, spec.max_order + 1) if n % 2 == 0 and n >= 4
    ]
    graphs: List[Graph] = []
    budget = _Budget(spec)
    while len(graphs) < spec.count:
        budget.spend(len(graphs))
        n = rng.choice(orders)
        edges = _pairing_edges(rng, n)
        if edges is None:
            continue
        g = Graph.from_edges(n, edges, name=corpus_name(spec, len(graphs)))
        if meets_floor(g, spec.odd_girth_floor):
            graphs.append(g)
    return graphs


def _family_sweep(spec: CorpusSpec, caps: Optional[SizeCaps]) -> List[Graph]:
    graphs = []
    for descriptor in spec.families:
        g = build_family(descriptor, caps)
        if not spec.min_order <= g.order <= spec.max_order:
            logger.debug("family %s outside the order bounds, skipped", descriptor)
            continue
        if not meets_floor(g, spec.odd_girth_floor):
            logger.debug("family %s below the odd-girth floor, skipped", descriptor)
            continue
        graphs.append(g)
    return graphs


@with_monitoring(ComponentName.HARNESS)
def generate_corpus(spec: CorpusSpec, caps: Optional[SizeCaps] = None) -> List[Graph]:
    """Graphs described by ``spec``.

    Raises:
        CorpusExhaustedError: when rejection sampling runs out of attempts.
    """
    rng = random.Random(spec.seed)
    if spec.generator == CorpusGenerator.GNP_ODD_GIRTH:
        graphs = _gnp_odd_girth(spec, rng)
    elif spec.generator == CorpusGenerator.RANDOM_CUBIC:
        graphs = _random_cubic(spec, rng)
    else:
        graphs = _family_sweep(spec, caps)
    logger.debug("generated %s graphs for %s", len(graphs), spec.generator.value)
    return graphs
