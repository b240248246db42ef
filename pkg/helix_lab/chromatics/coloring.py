"""Exact chromatic number by DSATUR branch and bound.

The search runs on the dominated-vertex reduction of the input: a dominated
vertex can always copy the colour of its dominator, so the reduced graph has
the same chromatic number and any colouring of it lifts back through the
retraction.
"""

import logging
from typing import List, Optional, Sequence

from ..core.errors import CapExceededError, InvalidParameterError
from ..core.models.chromatic_models import ChromaticResult, Rational
from ..core.models.config_models import SizeCaps
from ..core.models.family_models import ReductionTrace
from ..core.models.graph_models import Graph
from ..core.models.hom_models import VertexMap
from ..core.settings import load_caps
from ..graphs.families import complete
from ..graphs.reduction import while_reduce
from ..monitoring import ComponentName, with_monitoring
from ..utils.bitsets import iter_bits, popcount

logger = logging.getLogger(__name__)


def require_loop_free(g: Graph, parameter: str) -> None:
    if g.has_loops:
        raise InvalidParameterError(
            f"{parameter} is undefined for {g.describe()}: it has loops", "g"
        )


def check_order_cap(g: Graph, cap: str, caps: Optional[SizeCaps]) -> SizeCaps:
    caps = caps or load_caps()
    limit = getattr(caps, cap)
    if g.order > limit:
        raise CapExceededError(cap, limit, g.order)
    return caps


def lift_assignment(
    trace: ReductionTrace, reduced_assignment: Sequence[int]
) -> List[int]:
    """Extend an assignment of the survivors to every original vertex."""
    position = {v: i for i, v in enumerate(trace.survivors)}
    return [reduced_assignment[position[r]] for r in trace.retraction]


def is_proper_coloring(g: Graph, colors: Sequence[int]) -> bool:
    return len(colors) == g.order and all(colors[u] != colors[v] for u, v in g.edges())


def greedy_clique(g: Graph) -> List[int]:
    """Largest clique found by greedy extension from every start vertex."""
    best: List[int] = []
    for start in range(g.order):
        clique = [start]
        candidates = g.rows[start] & ~(1 << start)
        while candidates:
            v = max(
                iter_bits(candidates),
                key=lambda w: (popcount(g.rows[w] & candidates), -w),
            )
            clique.append(v)
            candidates &= g.rows[v]
        if len(clique) > len(best):
            best = sorted(clique)
    return best


def dsatur_coloring(g: Graph) -> List[int]:
    """Greedy colouring in saturation order; colours are ``0..``."""
    colors = [-1] * g.order
    saturation = [0] * g.order
    uncolored = g.all_vertices
    while uncolored:
        v = min(
            iter_bits(uncolored),
            key=lambda w: (-popcount(saturation[w]), -g.degree(w), w),
        )
        seen = saturation[v]
        c = (~seen & (seen + 1)).bit_length() - 1
        colors[v] = c
        uncolored &= ~(1 << v)
        for w in iter_bits(g.rows[v] & uncolored):
            saturation[w] |= 1 << c
    return colors


def search_coloring(
    g: Graph, t: int, stats: Optional[List[int]] = None
) -> Optional[List[int]]:
    """Exhaustive ``t``-colouring search, ``None`` when none exists.

    The next vertex is the one with the fewest remaining colours; a new
    colour is only ever the next unused one.
    """
    if t < 1:
        return None if g.order else []
    domains = [(1 << t) - 1] * g.order
    colors = [-1] * g.order
    degree = [g.degree(v) for v in range(g.order)]
    uncolored = g.all_vertices

    def pick() -> int:
        return min(
            iter_bits(uncolored),
            key=lambda w: (popcount(domains[w]), -degree[w], w),
        )

    def extend(used: int) -> bool:
        nonlocal uncolored
        if not uncolored:
            return True
        v = pick()
        allowed = domains[v] & ((1 << min(t, used + 1)) - 1)
        uncolored &= ~(1 << v)
        for c in iter_bits(allowed):
            if stats is not None:
                stats[0] += 1
            colors[v] = c
            bit = 1 << c
            narrowed: List[int] = []
            consistent = True
            for w in iter_bits(g.rows[v] & uncolored):
                if domains[w] & bit:
                    domains[w] &= ~bit
                    narrowed.append(w)
                    if not domains[w]:
                        consistent = False
                        break
            if consistent and extend(max(used, c + 1)):
                return True
            for w in narrowed:
                domains[w] |= bit
        colors[v] = -1
        uncolored |= 1 << v
        return False

    return colors if extend(0) else None


def _coloring_map(g: Graph, colors: Sequence[int], t: int) -> VertexMap:
    return VertexMap(source=g, target=complete(t), assignment=tuple(colors))


def find_coloring(
    g: Graph, t: int, caps: Optional[SizeCaps] = None
) -> Optional[VertexMap]:
    """A proper ``t``-colouring of ``g`` as a map into ``K:t``, or ``None``."""
    require_loop_free(g, "a colouring")
    if t < 1:
        raise InvalidParameterError(f"need at least one colour, got {t}", "t")
    check_order_cap(g, "chromatic_order", caps)
    reduced, trace = while_reduce(g)
    colors = search_coloring(reduced, t)
    if colors is None:
        return None
    return _coloring_map(g, lift_assignment(trace, colors), t)


@with_monitoring(ComponentName.CHROMATICS)
def chromatic_number(g: Graph, caps: Optional[SizeCaps] = None) -> ChromaticResult:
    """Exact chromatic number with a colouring and the refuted colour counts.

    Colour counts from the clique bound up to one below the DSATUR bound are
    tried in increasing order; every failed count is listed in ``refuted``.
    """
    require_loop_free(g, "the chromatic number")
    check_order_cap(g, "chromatic_order", caps)
    if g.order == 0:
        return ChromaticResult(parameter="chromatic", value=Rational.of(0))

    reduced, trace = while_reduce(g)
    lower = len(greedy_clique(reduced))
    colors = dsatur_coloring(reduced)
    upper = max(colors) + 1
    logger.debug(
        "chromatic bounds for %s: clique %s, dsatur %s", g.describe(), lower, upper
    )

    refuted: List[str] = []
    stats = [0]
    value = upper
    for t in range(lower, upper):
        found = search_coloring(reduced, t, stats)
        if found is not None:
            colors, value = found, t
            break
        refuted.append(str(t))
    logger.debug(
        "chromatic number of %s is %s (%s search nodes, refuted %s)",
        g.describe(),
        value,
        stats[0],
        refuted,
    )
    return ChromaticResult(
        parameter="chromatic",
        value=Rational.of(value),
        certificate=_coloring_map(g, lift_assignment(trace, colors), value),
        refuted=tuple(refuted),
    )
