"""Elimination of dominated vertices."""

import logging
from typing import List, Optional, Tuple

from ..core.errors import InvalidParameterError
from ..core.models.family_models import ReductionTrace
from ..core.models.graph_models import Graph
from ..monitoring import ComponentName, with_monitoring
from ..utils.bitsets import iter_bits, lowest_bit

logger = logging.getLogger(__name__)


def dominators(g: Graph, u: int, alive: int) -> int:
    """Alive vertices ``v != u`` with ``N(u) <= N(v)`` inside ``alive``."""
    common = alive
    for w in iter_bits(g.rows[u] & alive):
        common &= g.rows[w]
        if not common:
            break
    return common & ~(1 << u)


def _next_removal(g: Graph, alive: int) -> Optional[Tuple[int, int]]:
    """First ``(removed, witness)`` pair in index order, or ``None``."""
    for u in iter_bits(alive):
        candidates = dominators(g, u, alive)
        if not candidates:
            continue
        v = lowest_bit(candidates)
        if v > u and g.rows[u] & alive == g.rows[v] & alive:
            # equal neighbourhoods: the later label goes
            return v, u
        return u, v
    return None


def dominated_vertices(g: Graph) -> List[int]:
    """Vertices of ``g`` dominated by some other vertex."""
    alive = g.all_vertices
    return [u for u in range(g.order) if dominators(g, u, alive)]


@with_monitoring(ComponentName.FAMILIES)
def while_reduce(g: Graph) -> Tuple[Graph, ReductionTrace]:
    """Remove dominated vertices until none is left.

    Vertices are scanned in index order (label order for family graphs) and
    the scan restarts after every removal. Returns the surviving induced
    subgraph and the trace with its retraction.
    """
    if g.has_loops:
        raise InvalidParameterError("while_reduce needs a loop-free graph", "g")
    alive = g.all_vertices
    removed: List[Tuple[int, int]] = []
    while True:
        step = _next_removal(g, alive)
        if step is None:
            break
        u, v = step
        removed.append(step)
        alive &= ~(1 << u)
        logger.debug("removed %s dominated by %s", g.label(u) or u, g.label(v) or v)

    retraction = list(range(g.order))
    for u, v in reversed(removed):
        retraction[u] = retraction[v]
    survivors = tuple(iter_bits(alive))
    trace = ReductionTrace(
        removed=tuple(removed), survivors=survivors, retraction=tuple(retraction)
    )
    name = f"R({g.name})" if g.name else None
    logger.info(
        "reduction of %s removed %s of %s vertices", g.describe(), len(removed), g.order
    )
    return g.induced(survivors, name=name), trace
