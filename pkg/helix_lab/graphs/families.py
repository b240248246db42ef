"""Constructors for the named graph families.

Every family vertex is labelled; structured labels are tuples of 1-based
subsets, so a Kneser vertex ``{1, 3}`` carries the label ``((1, 3),)`` and a
helical vertex carries ``(A_1, ..., A_k)``. Vertex order is lexicographic on
labels throughout, except for the breadth-first Coxeter graph.
"""

import logging
from collections import defaultdict, deque
from functools import lru_cache
from itertools import combinations, islice
from math import comb
from typing import Callable, Dict, Iterator, List, Optional, Tuple, Union

from ..core.constants.family_kinds import FamilyKind
from ..core.errors import CapExceededError, InvalidParameterError
from ..core.models.config_models import SizeCaps
from ..core.models.family_models import FamilyDescriptor, HelicalVertex, StableSubset
from ..core.models.graph_models import Graph
from ..core.settings import load_caps
from ..monitoring import ComponentName, with_monitoring
from ..utils.bitsets import full_mask, popcount, subset_elements, subset_mask
from .descriptors import parse_descriptor
from .stable_sets import complement_is_stable_union, is_stable_union, stable_subsets

logger = logging.getLogger(__name__)

BASIC_KINDS = (
    FamilyKind.COMPLETE,
    FamilyKind.CYCLE,
    FamilyKind.CIRCULAR_COMPLETE,
)
HELICAL_KINDS = (
    FamilyKind.HELICAL,
    FamilyKind.SCHRIJVER_HELICAL,
    FamilyKind.STABLE_HELICAL,
)


def _check_kneser_parameters(m: int, n: int) -> None:
    if n < 1 or m < 2 * n:
        raise InvalidParameterError(f"need m >= 2n >= 2, got m={m}, n={n}", "m")


def _family_limit(caps: Optional[SizeCaps]) -> int:
    return (caps or load_caps()).family_order


# Basic families


@lru_cache(maxsize=64)
def circular_complete(n: int, d: int) -> Graph:
    """``K_(n,d)``: ``v_i ~ v_j`` iff ``d <= |i - j| <= n - d``."""
    if d < 1 or n < 2 * d:
        raise InvalidParameterError(f"need n >= 2d >= 2, got n={n}, d={d}", "d")
    edges = [(i, j) for i, j in combinations(range(n), 2) if d <= j - i <= n - d]
    return Graph.from_edges(n, edges, name=f"Kc:{n},{d}")


@lru_cache(maxsize=64)
def complete(m: int) -> Graph:
    if m < 1:
        raise InvalidParameterError(f"complete graph needs m >= 1, got {m}", "m")
    return Graph.from_edges(m, combinations(range(m), 2), name=f"K:{m}")


@lru_cache(maxsize=64)
def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}", "n")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], name=f"C:{n}")


@lru_cache(maxsize=16)
def hypercube(d: int) -> Graph:
    if d < 1:
        raise InvalidParameterError(f"hypercube needs d >= 1, got {d}", "d")
    edges = [
        (v, v ^ (1 << b)) for v in range(1 << d) for b in range(d) if not v >> b & 1
    ]
    return Graph.from_edges(1 << d, edges, name=f"Q:{d}")


@lru_cache(maxsize=16)
def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidParameterError(f"parts must be non-empty, got {a},{b}", "a")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return Graph.from_edges(a + b, edges, name=f"Kmn:{a},{b}")


def basic_family(spec: Union[str, FamilyDescriptor]) -> Graph:
    """Complete graphs, cycles and circular complete graphs."""
    desc = parse_descriptor(spec) if isinstance(spec, str) else spec
    if desc.kind == FamilyKind.COMPLETE:
        return complete(*desc.params)
    if desc.kind == FamilyKind.CYCLE:
        return cycle(*desc.params)
    if desc.kind == FamilyKind.CIRCULAR_COMPLETE:
        return circular_complete(*desc.params)
    raise InvalidParameterError(
        f"{desc.canonical} is not a basic family (K, C or Kc)", "spec"
    )


# Kneser and Schrijver graphs


def _disjointness_graph(masks: List[int], name: str) -> Graph:
    rows = [0] * len(masks)
    for i, a in enumerate(masks):
        for j in range(i + 1, len(masks)):
            if not a & masks[j]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    labels = tuple((subset_elements(mask),) for mask in masks)
    return Graph(order=len(masks), rows=tuple(rows), labels=labels, name=name)


@lru_cache(maxsize=32)
@with_monitoring(ComponentName.FAMILIES)
def _kneser(m: int, n: int, limit: int) -> Graph:
    _check_kneser_parameters(m, n)
    size = comb(m, n)
    if size > limit:
        raise CapExceededError("family_order", limit, size)
    masks = [subset_mask(c) for c in combinations(range(1, m + 1), n)]
    return _disjointness_graph(masks, f"KG:{m},{n}")


def kneser(m: int, n: int, caps: Optional[SizeCaps] = None) -> Graph:
    """``KG(m, n)``: ``n``-subsets of ``{1..m}``, adjacent when disjoint."""
    return _kneser(m, n, _family_limit(caps))


@lru_cache(maxsize=32)
@with_monitoring(ComponentName.FAMILIES)
def _schrijver(m: int, n: int, limit: int) -> Graph:
    _check_kneser_parameters(m, n)
    masks = list(stable_subsets(m, n))
    if len(masks) > limit:
        raise CapExceededError("family_order", limit, len(masks))
    for mask in masks:
        StableSubset(elements=subset_elements(mask), m=m)
    return _disjointness_graph(masks, f"SG:{m},{n}")


def schrijver(m: int, n: int, caps: Optional[SizeCaps] = None) -> Graph:
    """``SG(m, n)``: the subgraph of ``KG(m, n)`` induced by 2-stable sets."""
    return _schrijver(m, n, _family_limit(caps))


def petersen() -> Graph:
    return kneser(5, 2).model_copy(update={"name": "P"})


# Lines of the Fano plane on {1..7}: translates of the difference set {0, 1, 3}
FANO_LINES = frozenset(frozenset((i + d) % 7 + 1 for d in (0, 1, 3)) for i in range(7))


@lru_cache(maxsize=1)
def coxeter() -> Graph:
    """The Coxeter graph: cubic, 28 vertices, girth 7.

    Vertices are the 3-subsets of ``{1..7}`` that are not Fano lines,
    adjacent when disjoint. They are numbered in breadth-first order from
    ``{1,2,3}`` (neighbours in label order), so each vertex after the first
    follows one of its neighbours.
    """
    triples = [
        t for t in combinations(range(1, 8), 3) if frozenset(t) not in FANO_LINES
    ]
    disjoint = {t: [u for u in triples if not set(t) & set(u)] for t in triples}
    order = [triples[0]]
    seen = {triples[0]}
    queue = deque(order)
    while queue:
        for u in disjoint[queue.popleft()]:
            if u not in seen:
                seen.add(u)
                order.append(u)
                queue.append(u)
    position = {t: i for i, t in enumerate(order)}
    edges = [
        (position[t], position[u])
        for t in order
        for u in disjoint[t]
        if position[t] < position[u]
    ]
    return Graph.from_edges(len(order), edges, labels=[(t,) for t in order], name="Cox")


# Helical families


def _coordinate_filter(kind: FamilyKind, m: int, n: int) -> Callable[[int], bool]:
    if kind == FamilyKind.HELICAL:
        return lambda mask: True
    if kind == FamilyKind.SCHRIJVER_HELICAL:
        return lambda mask: is_stable_union(mask, m, n)
    if kind == FamilyKind.STABLE_HELICAL:
        return lambda mask: is_stable_union(mask, m, n) and complement_is_stable_union(
            mask, m, n
        )
    raise InvalidParameterError(f"{kind.value} is not a helical family", "kind")


@lru_cache(maxsize=4096)
def _supersets_within(required: int, universe: int, min_size: int) -> Tuple[int, ...]:
    """Sets ``S`` with ``required <= S <= universe`` and ``|S| >= min_size``.

    Ordered lexicographically by sorted elements.
    """
    free = universe & ~required
    found = []
    sub = free
    while True:
        candidate = required | sub
        if popcount(candidate) >= min_size:
            found.append(candidate)
        if sub == 0:
            break
        sub = (sub - 1) & free
    return tuple(sorted(found, key=subset_elements))


def iter_helical_tuples(
    m: int, n: int, k: int, kind: FamilyKind = FamilyKind.HELICAL
) -> Iterator[Tuple[int, ...]]:
    """Vertex masks ``(A_1, ..., A_k)`` of a helical family, in label order."""
    _check_kneser_parameters(m, n)
    if k < 1:
        raise InvalidParameterError(f"k must be positive, got {k}", "k")
    allowed = _coordinate_filter(kind, m, n)
    full = full_mask(m)

    def extend(prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == k:
            yield prefix
            return
        required = prefix[-2] if len(prefix) >= 2 else 0
        for candidate in _supersets_within(required, full & ~prefix[-1], n):
            if allowed(candidate):
                yield from extend(prefix + (candidate,))

    for first in combinations(range(1, m + 1), n):
        mask = subset_mask(first)
        if allowed(mask):
            yield from extend((mask,))


def count_helical_vertices(
    m: int,
    n: int,
    k: int,
    kind: FamilyKind = FamilyKind.HELICAL,
    limit: Optional[int] = None,
) -> int:
    """Vertex count, stopping at ``limit + 1`` when a limit is given."""
    tuples = iter_helical_tuples(m, n, k, kind)
    if limit is not None:
        tuples = islice(tuples, limit + 1)
    return sum(1 for _ in tuples)


def _helical_adjacent(a: Tuple[int, ...], b: Tuple[int, ...]) -> bool:
    k = len(a)
    for i in range(k):
        if a[i] & b[i]:
            return False
    for j in range(k - 1):
        if a[j] & ~b[j + 1] or b[j] & ~a[j + 1]:
            return False
    return True


@lru_cache(maxsize=64)
@with_monitoring(ComponentName.FAMILIES)
def _helical_family(m: int, n: int, k: int, kind: FamilyKind, limit: int) -> Graph:
    tuples = list(islice(iter_helical_tuples(m, n, k, kind), limit + 1))
    if len(tuples) > limit:
        raise CapExceededError("family_order", limit, len(tuples))

    by_first: Dict[int, List[int]] = defaultdict(list)
    for index, vertex in enumerate(tuples):
        by_first[vertex[0]].append(index)

    rows = [0] * len(tuples)
    for i, a in enumerate(tuples):
        for first, members in by_first.items():
            if first & a[0]:
                continue
            for j in members:
                if j > i and _helical_adjacent(a, tuples[j]):
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i

    labels = []
    for vertex in tuples:
        label = tuple(subset_elements(mask) for mask in vertex)
        HelicalVertex(sets=label, m=m, n=n, k=k)
        labels.append(label)
    logger.debug("built %s:%s,%s,%s with %s vertices", kind.value, m, n, k, len(tuples))
    return Graph(
        order=len(tuples),
        rows=tuple(rows),
        labels=tuple(labels),
        name=f"{kind.value}:{m},{n},{k}",
    )


def helical(m: int, n: int, k: int, caps: Optional[SizeCaps] = None) -> Graph:
    """The helical graph ``H(m, n, k)``."""
    return _helical_family(m, n, k, FamilyKind.HELICAL, _family_limit(caps))


def schrijver_helical(m: int, n: int, k: int, caps: Optional[SizeCaps] = None) -> Graph:
    """``SG(m, n, k)``: every coordinate is a union of 2-stable ``n``-sets."""
    return _helical_family(m, n, k, FamilyKind.SCHRIJVER_HELICAL, _family_limit(caps))


def stable_helical(m: int, n: int, k: int, caps: Optional[SizeCaps] = None) -> Graph:
    """``SH(m, n, k)``: coordinates and their complements are stable unions."""
    return _helical_family(m, n, k, FamilyKind.STABLE_HELICAL, _family_limit(caps))


def build_family(
    spec: Union[str, FamilyDescriptor], caps: Optional[SizeCaps] = None
) -> Graph:
    """Construct any family from its descriptor."""
    desc = parse_descriptor(spec) if isinstance(spec, str) else spec
    p = desc.params
    if desc.kind in BASIC_KINDS:
        return basic_family(desc)
    if desc.kind == FamilyKind.KNESER:
        return kneser(p[0], p[1], caps)
    if desc.kind == FamilyKind.SCHRIJVER:
        return schrijver(p[0], p[1], caps)
    if desc.kind == FamilyKind.HELICAL:
        return helical(p[0], p[1], p[2], caps)
    if desc.kind == FamilyKind.SCHRIJVER_HELICAL:
        return schrijver_helical(p[0], p[1], p[2], caps)
    if desc.kind == FamilyKind.STABLE_HELICAL:
        return stable_helical(p[0], p[1], p[2], caps)
    if desc.kind == FamilyKind.PETERSEN:
        return petersen()
    if desc.kind == FamilyKind.COXETER:
        return coxeter()
    if desc.kind == FamilyKind.HYPERCUBE:
        return hypercube(p[0])
    return complete_bipartite(p[0], p[1])


def family_descriptor_of(g: Graph) -> Optional[FamilyDescriptor]:
    """Descriptor recorded in the graph name, if it is a plain family."""
    if not g.name:
        return None
    try:
        return parse_descriptor(g.name)
    except InvalidParameterError:
        return None


def helical_parameters(g: Graph) -> Tuple[FamilyKind, int, int, int]:
    """``(kind, m, n, k)`` of a Kneser, Schrijver or helical family graph.

    Kneser and Schrijver graphs count as the ``k = 1`` members of their
    helical families.
    """
    desc = family_descriptor_of(g)
    if desc is None:
        raise InvalidParameterError(
            f"{g.describe()} is not a named Kneser/Schrijver/helical graph", "target"
        )
    if desc.kind == FamilyKind.KNESER:
        return FamilyKind.HELICAL, desc.params[0], desc.params[1], 1
    if desc.kind == FamilyKind.SCHRIJVER:
        return FamilyKind.SCHRIJVER_HELICAL, desc.params[0], desc.params[1], 1
    if desc.kind in HELICAL_KINDS:
        m, n, k = desc.params
        return desc.kind, m, n, k
    raise InvalidParameterError(
        f"{desc.canonical} is not a Kneser/Schrijver/helical graph", "target"
    )


def label_masks(g: Graph, v: int) -> Tuple[int, ...]:
    """Coordinates of a structured label as ground-set masks."""
    label = g.label(v)
    if not isinstance(label, tuple):
        raise InvalidParameterError(f"vertex {v} has no set label", "g")
    return tuple(subset_mask(part) for part in label)


