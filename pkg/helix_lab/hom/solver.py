"""Backtracking homomorphism search with forward checking.

Source vertices are assigned in a static order (descending degree, then
index); target candidates are tried in ascending index order, so the first
solution found is the lexicographically first one under that ordering.
"""

import logging
from typing import Dict, Iterator, List, Optional, Tuple

from ..core.models.config_models import SizeCaps
from ..core.models.graph_models import Graph
from ..core.models.hom_models import HomSearchResult, SearchMode, VertexMap
from ..core.settings import load_caps
from ..monitoring import ComponentName, with_monitoring
from ..utils.bitsets import iter_bits

logger = logging.getLogger(__name__)


def is_homomorphism(f: VertexMap) -> bool:
    """Every source edge, loops included, lands on a target edge."""
    return not f.violations()


def search_order(g: Graph) -> List[int]:
    return sorted(range(g.order), key=lambda v: (-g.degree(v), v))


def initial_domains(
    g: Graph, h: Graph, pinned: Optional[Dict[int, int]] = None
) -> List[int]:
    """Candidate bitsets before search.

    Looped source vertices need looped images; vertices with a neighbour
    need images with a neighbour.
    """
    looped = 0
    non_isolated = 0
    for x in range(h.order):
        if h.has_loop(x):
            looped |= 1 << x
        if h.rows[x]:
            non_isolated |= 1 << x
    domains = []
    for v in range(g.order):
        if g.has_loop(v):
            domain = looped
        elif g.rows[v]:
            domain = non_isolated
        else:
            domain = h.all_vertices
        if pinned and v in pinned:
            domain &= pinned[v]
        domains.append(domain)
    return domains


def search_homomorphisms(
    g: Graph,
    h: Graph,
    pinned: Optional[Dict[int, int]] = None,
    stats: Optional[List[int]] = None,
) -> Iterator[Tuple[int, ...]]:
    """Yield every homomorphism ``g -> h`` as an assignment tuple, in order.

    ``pinned`` restricts chosen source vertices to a bitset of targets.
    ``stats[0]`` is incremented once per expanded node when given.
    """
    order = search_order(g)
    position = [0] * g.order
    for index, v in enumerate(order):
        position[v] = index
    later = [0] * g.order
    for v in range(g.order):
        for w in iter_bits(g.rows[v]):
            if position[w] > position[v]:
                later[v] |= 1 << w

    domains = initial_domains(g, h, pinned)
    if any(d == 0 for d in domains):
        return
    assignment = [-1] * g.order
    target_rows = h.rows

    def extend(depth: int) -> Iterator[Tuple[int, ...]]:
        if depth == len(order):
            yield tuple(assignment)
            return
        v = order[depth]
        for x in iter_bits(domains[v]):
            if stats is not None:
                stats[0] += 1
            assignment[v] = x
            allowed = target_rows[x]
            saved: List[Tuple[int, int]] = []
            consistent = True
            for w in iter_bits(later[v]):
                narrowed = domains[w] & allowed
                if narrowed != domains[w]:
                    saved.append((w, domains[w]))
                    domains[w] = narrowed
                    if not narrowed:
                        consistent = False
                        break
            if consistent:
                yield from extend(depth + 1)
            for w, old in reversed(saved):
                domains[w] = old
        assignment[v] = -1

    yield from extend(0)


@with_monitoring(ComponentName.HOM_ENGINE)
def find_homomorphism(
    g: Graph,
    h: Graph,
    mode: SearchMode = SearchMode.FIRST,
    limit: Optional[int] = None,
    pinned: Optional[Dict[int, int]] = None,
    caps: Optional[SizeCaps] = None,
) -> HomSearchResult:
    """Decide, construct or count homomorphisms ``g -> h``.

    In count mode the count stops at ``limit`` (default: the configured
    ``hom_count_limit``) and ``saturated`` means "at least limit".
    """
    stats = [0]
    solutions = search_homomorphisms(g, h, pinned=pinned, stats=stats)
    if mode == SearchMode.COUNT:
        cap = limit if limit is not None else (caps or load_caps()).hom_count_limit
        count = 0
        for _ in solutions:
            count += 1
            if count >= cap:
                break
        result = HomSearchResult(
            mode=mode,
            exists=count > 0,
            count=count,
            saturated=count >= cap,
            nodes=stats[0],
        )
    else:
        first = next(solutions, None)
        witness = None
        if first is not None and mode == SearchMode.FIRST:
            witness = VertexMap(source=g, target=h, assignment=first)
        result = HomSearchResult(
            mode=mode, exists=first is not None, witness=witness, nodes=stats[0]
        )
    logger.debug(
        "hom %s -> %s (%s): exists=%s nodes=%s",
        g.describe(),
        h.describe(),
        mode.value,
        result.exists,
        result.nodes,
    )
    return result


def has_homomorphism(g: Graph, h: Graph) -> bool:
    return find_homomorphism(g, h, SearchMode.DECIDE).exists


def homomorphism(
    g: Graph, h: Graph, pinned: Optional[Dict[int, int]] = None
) -> Optional[VertexMap]:
    """Lexicographically first homomorphism ``g -> h``, or ``None``."""
    return find_homomorphism(g, h, SearchMode.FIRST, pinned=pinned).witness


def count_homomorphisms(g: Graph, h: Graph, limit: Optional[int] = None) -> int:
    result = find_homomorphism(g, h, SearchMode.COUNT, limit=limit)
    return result.count or 0


def hom_equivalent(g: Graph, h: Graph) -> bool:
    """``g -> h`` and ``h -> g``."""
    return has_homomorphism(g, h) and has_homomorphism(h, g)
