"""Local chromatic number by descending decision searches."""

import logging
from typing import List, Optional

from ..core.models.chromatic_models import ChromaticResult, Rational
from ..core.models.config_models import SizeCaps
from ..core.models.graph_models import Graph
from ..core.models.hom_models import VertexMap
from ..graphs.families import complete
from ..monitoring import ComponentName, with_monitoring
from ..utils.bitsets import iter_bits, popcount
from .coloring import (
    check_order_cap,
    chromatic_number,
    greedy_clique,
    require_loop_free,
)

logger = logging.getLogger(__name__)


def local_load(g: Graph, colors: List[int]) -> int:
    """``max_v |{c(u) : u in N(v)}| + 1`` for a proper colouring."""
    if g.order == 0:
        return 0
    traces = (len({colors[u] for u in iter_bits(row)}) for row in g.rows)
    return max(traces) + 1


def search_local_coloring(
    g: Graph, s: int, stats: Optional[List[int]] = None
) -> Optional[List[int]]:
    """A proper colouring with at most ``s - 1`` colours on every neighbourhood.

    The palette is bounded by ``|V|`` and colour classes are opened in
    canonical order.
    """
    if s < 1:
        return None if g.order else []
    order = sorted(range(g.order), key=lambda v: (-g.degree(v), v))
    colors = [-1] * g.order
    traces = [0] * g.order
    budget = s - 1

    def extend(depth: int, used: int) -> bool:
        if depth == len(order):
            return True
        v = order[depth]
        for c in range(min(used + 1, g.order)):
            bit = 1 << c
            if traces[v] & bit:
                continue
            if stats is not None:
                stats[0] += 1
            touched: List[int] = []
            feasible = True
            for w in iter_bits(g.rows[v]):
                if traces[w] & bit:
                    continue
                traces[w] |= bit
                touched.append(w)
                if popcount(traces[w]) > budget:
                    feasible = False
                    break
            if feasible:
                colors[v] = c
                if extend(depth + 1, max(used, c + 1)):
                    return True
                colors[v] = -1
            for w in touched:
                traces[w] &= ~bit
        return False

    return colors if extend(0, 0) else None


@with_monitoring(ComponentName.CHROMATICS)
def local_chromatic(g: Graph, caps: Optional[SizeCaps] = None) -> ChromaticResult:
    """Exact local chromatic number; the certificate is an optimal colouring."""
    require_loop_free(g, "the local chromatic number")
    caps = check_order_cap(g, "local_order", caps)
    if g.order == 0:
        return ChromaticResult(parameter="local", value=Rational.of(0))

    chromatic = chromatic_number(g, caps)
    assert chromatic.certificate is not None
    best = list(chromatic.certificate.assignment)
    value = local_load(g, best)
    floor = len(greedy_clique(g))
    refuted: List[str] = []
    stats = [0]
    while value > floor:
        found = search_local_coloring(g, value - 1, stats)
        if found is None:
            refuted.append(str(value - 1))
            break
        best, value = found, local_load(g, found)

    palette = max(best) + 1
    logger.debug(
        "local chromatic of %s is %s (%s search nodes)", g.describe(), value, stats[0]
    )
    return ChromaticResult(
        parameter="local",
        value=Rational.of(value),
        certificate=VertexMap(
            source=g, target=complete(palette), assignment=tuple(best)
        ),
        refuted=tuple(refuted),
    )
