"""Isomorphism test for small graphs."""

import logging
from typing import List, Optional

from ..core.errors import CapExceededError
from ..core.models.config_models import SizeCaps
from ..core.models.graph_models import Graph
from ..core.settings import load_caps
from ..monitoring import ComponentName, with_monitoring
from ..utils.bitsets import iter_bits
from .operators import cycle_stats

logger = logging.getLogger(__name__)


def _signature(g: Graph, v: int) -> tuple:
    neighbour_degrees = sorted(g.degree(u) for u in iter_bits(g.rows[v]))
    return (g.degree(v), g.has_loop(v), tuple(neighbour_degrees))


def _search_order(g: Graph) -> List[int]:
    """Vertices in BFS order from the highest-degree vertex of each component."""
    order: List[int] = []
    placed = 0
    remaining = sorted(range(g.order), key=lambda v: (-g.degree(v), v))
    for start in remaining:
        if (placed >> start) & 1:
            continue
        queue = [start]
        placed |= 1 << start
        for v in queue:
            order.append(v)
            fresh = iter_bits(g.rows[v] & ~placed)
            for w in sorted(fresh, key=lambda u: (-g.degree(u), u)):
                placed |= 1 << w
                queue.append(w)
    return order


@with_monitoring(ComponentName.GRAPHS)
def find_isomorphism(
    g: Graph, h: Graph, caps: Optional[SizeCaps] = None
) -> Optional[List[int]]:
    """An adjacency-preserving bijection ``V(g) -> V(h)``, or ``None``."""
    caps = caps or load_caps()
    for graph in (g, h):
        if graph.order > caps.isomorphism_order:
            raise CapExceededError(
                "isomorphism_order", caps.isomorphism_order, graph.order
            )

    if g.order != h.order or g.edge_count != h.edge_count:
        return None
    sig_g = [_signature(g, v) for v in range(g.order)]
    sig_h = [_signature(h, v) for v in range(h.order)]
    if sorted(sig_g) != sorted(sig_h):
        return None
    if cycle_stats(g) != cycle_stats(h):
        return None

    order = _search_order(g)
    mapping = [-1] * g.order
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == len(order):
            return True
        v = order[depth]
        for x in range(h.order):
            if (used >> x) & 1 or sig_h[x] != sig_g[v]:
                continue
            if any(
                g.adjacent(v, u) != h.adjacent(x, mapping[u])
                for u in order[:depth]
            ):
                continue
            mapping[v] = x
            used |= 1 << x
            if extend(depth + 1):
                return True
            used &= ~(1 << x)
            mapping[v] = -1
        return False

    if extend(0):
        return mapping
    return None


def is_isomorphic(g: Graph, h: Graph, caps: Optional[SizeCaps] = None) -> bool:
    """True iff an edge-preserving bijection exists between ``g`` and ``h``."""
    result = find_isomorphism(g, h, caps)
    logger.debug(
        "isomorphism %s vs %s: %s", g.describe(), h.describe(), result is not None
    )
    return result is not None
