"""Structural operators on graphs: powers, subdivisions, walks and girth."""

import logging
from typing import FrozenSet, List, Optional, Tuple

from ..core.errors import InvalidParameterError
from ..core.models.graph_models import CycleStats, Graph
from ..utils.bitsets import iter_bits

logger = logging.getLogger(__name__)


def _step(g: Graph, mask: int) -> int:
    """Vertices joined by one edge to some vertex of ``mask``."""
    reached = 0
    rows = g.rows
    for v in iter_bits(mask):
        reached |= rows[v]
    return reached


def compose_rows(g: Graph, rows: Tuple[int, ...]) -> Tuple[int, ...]:
    """Relation composition: walks counted by ``rows`` extended by one edge."""
    return tuple(_step(g, row) for row in rows)


def power(g: Graph, k: int) -> Graph:
    """The ``k``-th power: ``u ~ v`` iff a walk of length exactly ``k`` joins them."""
    if k < 1:
        raise InvalidParameterError(f"power exponent must be positive, got {k}", "k")
    if k == 1:
        return g
    rows = g.rows
    for _ in range(k - 1):
        rows = compose_rows(g, rows)
    name = f"({g.name})^{k}" if g.name else None
    return Graph(order=g.order, rows=rows, labels=g.labels, name=name)


def walk_mask(g: Graph, v: int, i: int) -> int:
    """Bitset of ``N_i(v)``."""
    if not 0 <= v < g.order:
        raise InvalidParameterError(f"vertex {v} not in graph", "v")
    if i < 0:
        raise InvalidParameterError(f"walk length must be non-negative, got {i}", "i")
    mask = 1 << v
    for _ in range(i):
        mask = _step(g, mask)
    return mask


def walk_masks(g: Graph, v: int, upto: int) -> List[int]:
    """``[N_0(v), N_1(v), ..., N_upto(v)]`` as bitsets."""
    masks = [1 << v]
    for _ in range(upto):
        masks.append(_step(g, masks[-1]))
    return masks


def walk_neighborhood(g: Graph, v: int, i: int) -> FrozenSet[int]:
    """All vertices joined to ``v`` by a walk of length exactly ``i``."""
    return frozenset(iter_bits(walk_mask(g, v, i)))


def subdivision_index(order: int, t: int, edge_index: int, position: int) -> int:
    """Index of inner vertex ``position`` (1-based) on edge ``edge_index``."""
    return order + t * edge_index + (position - 1)


def subdivide(g: Graph, t: int) -> Graph:
    """Replace every edge by a path with ``t`` inner vertices.

    Original vertices keep their indices. Inner vertices follow in the
    lexicographic order of ``g.edges()``, running from the smaller endpoint.
    """
    if t < 0:
        raise InvalidParameterError(f"subdivision length must be >= 0, got {t}", "t")
    if g.has_loops:
        raise InvalidParameterError("cannot subdivide a graph with loops", "g")
    if t == 0:
        return g
    edges = g.edges()
    order = g.order + t * len(edges)
    new_edges: List[Tuple[int, int]] = []
    labels: List[object] = (
        list(g.labels) if g.labels is not None else [f"v{i}" for i in range(g.order)]
    )
    for index, (i, j) in enumerate(edges):
        path = [i]
        for position in range(1, t + 1):
            path.append(subdivision_index(g.order, t, index, position))
            labels.append(f"e{i}-{j}:{position}")
        path.append(j)
        new_edges.extend(zip(path, path[1:]))
    name = f"S{t}({g.name})" if g.name else None
    return Graph.from_edges(order, new_edges, labels=labels, name=name)


def _girth_from(g: Graph, root: int, best: Optional[int]) -> Optional[int]:
    dist = {root: 0}
    parent = {root: -1}
    queue = [root]
    found = best
    for u in queue:
        if found is not None and 2 * dist[u] + 1 >= found:
            break
        for w in iter_bits(g.rows[u]):
            if w not in dist:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
            elif w != parent[u]:
                length = dist[u] + dist[w] + 1
                if found is None or length < found:
                    found = length
    return found


def _odd_girth_from(g: Graph, root: int, best: Optional[int]) -> Optional[int]:
    """Shortest odd closed walk at ``root`` via the bipartite double cover."""
    seen = [1 << root, 0]
    frontier = 1 << root
    depth = 0
    while frontier:
        if best is not None and depth + 1 >= best:
            return None
        reached = _step(g, frontier)
        depth += 1
        parity = depth % 2
        if parity == 1 and (reached >> root) & 1:
            return depth
        frontier = reached & ~seen[parity]
        seen[parity] |= frontier
    return None


def cycle_stats(g: Graph) -> CycleStats:
    """Girth and odd girth; ``None`` means infinity."""
    if g.has_loops:
        return CycleStats(girth=1, odd_girth=1)
    girth: Optional[int] = None
    odd_girth: Optional[int] = None
    for v in range(g.order):
        if not g.rows[v]:
            continue
        girth = _girth_from(g, v, girth)
        candidate = _odd_girth_from(g, v, odd_girth)
        if candidate is not None and (odd_girth is None or candidate < odd_girth):
            odd_girth = candidate
    return CycleStats(girth=girth, odd_girth=odd_girth)


def odd_girth(g: Graph) -> Optional[int]:
    return cycle_stats(g).odd_girth


def cycle_order(g: Graph) -> List[int]:
    """Vertices of a connected 2-regular graph in cyclic order from vertex 0.

    The walk leaves 0 towards its smaller neighbour.
    """
    if g.order < 3 or any(g.degree(v) != 2 or g.has_loop(v) for v in range(g.order)):
        raise InvalidParameterError("cycle_order needs a 2-regular loopless graph", "g")
    sequence = [0]
    previous, current = 0, min(g.neighbor_list(0))
    while current != 0:
        sequence.append(current)
        nxt = [w for w in g.neighbor_list(current) if w != previous][0]
        previous, current = current, nxt
    if len(sequence) != g.order:
        raise InvalidParameterError("graph is a union of several cycles", "g")
    return sequence
