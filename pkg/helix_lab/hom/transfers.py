"""Constructive transfers between homomorphisms of powers and helical targets.

Each transfer validates its input certificate, builds the new map exactly as
the construction prescribes, and checks the promised postconditions before
returning. A failed postcondition raises ``InvariantViolation``.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from ..core.constants.family_kinds import FamilyKind
from ..core.errors import (
    CapExceededError,
    CertificateError,
    InvalidParameterError,
    InvariantViolation,
)
from ..core.models.config_models import SizeCaps
from ..core.models.family_models import HelicalVertex
from ..core.models.graph_models import Graph
from ..core.models.hom_models import VertexMap
from ..core.settings import load_caps
from ..graphs.families import (
    complete,
    cycle,
    helical,
    helical_parameters,
    kneser,
    label_masks,
    schrijver,
    schrijver_helical,
)
from ..graphs.operators import (
    cycle_order,
    odd_girth,
    power,
    subdivide,
    subdivision_index,
    walk_masks,
)
from ..graphs.stable_sets import is_two_stable
from ..monitoring import ComponentName, with_monitoring
from ..utils.bitsets import iter_bits, mask_of, subset_elements
from .solver import homomorphism, is_homomorphism

logger = logging.getLogger(__name__)


def _require_homomorphism(f: VertexMap, what: str) -> None:
    bad = f.violations()
    if bad:
        raise CertificateError(
            f"{what} is not a homomorphism {f.source.describe()} -> "
            f"{f.target.describe()}",
            details={"violations": bad[:5]},
        )


def _require_odd_girth(g: Graph, k: int) -> None:
    og = odd_girth(g)
    if og is not None and og < 2 * k + 1:
        raise InvalidParameterError(
            f"odd girth of {g.describe()} is {og}, need at least {2 * k + 1}",
            "g",
            details={"odd_girth": og, "k": k},
        )


def _ensure(condition: bool, message: str, **details: object) -> None:
    if not condition:
        raise InvariantViolation(message, details=dict(details))


def power_lift_check(f: VertexMap, k: int) -> bool:
    """The same assignment is a homomorphism between the ``k``-th powers."""
    _require_homomorphism(f, "map to lift")
    lifted = f.with_endpoints(power(f.source, k), power(f.target, k))
    return is_homomorphism(lifted)


# Helical encode / decode


def _kneser_side(kind: FamilyKind, m: int, n: int) -> Graph:
    if kind == FamilyKind.HELICAL:
        return kneser(m, n)
    return schrijver(m, n)


def _helical_side(kind: FamilyKind, m: int, n: int, k: int) -> Graph:
    if kind == FamilyKind.HELICAL:
        return helical(m, n, k)
    return schrijver_helical(m, n, k)


@lru_cache(maxsize=32)
def _mask_index(g: Graph) -> Dict[Tuple[int, ...], int]:
    return {label_masks(g, v): v for v in range(g.order)}


@with_monitoring(ComponentName.HOM_ENGINE)
def encode_homb(c: VertexMap, g: Graph, k: int) -> VertexMap:
    """Turn ``c: g^(2k-1) -> KG(m,n)`` into ``f: g -> H(m,n,k)``.

    ``f(v) = (c(v), c(N_1(v)), ..., c(N_{k-1}(v)))`` with ``c(S)`` the union of
    the colours on ``S``. Isolated vertices go to the first helical vertex.
    A Schrijver target yields a map into ``SG(m,n,k)``.
    """
    if k < 1:
        raise InvalidParameterError(f"k must be positive, got {k}", "k")
    if g.order == 0:
        raise InvalidParameterError("encode needs a non-empty graph", "g")
    kind, m, n, depth = helical_parameters(c.target)
    if depth != 1:
        raise InvalidParameterError(
            f"colouring target must be KG or SG, got {c.target.describe()}", "c"
        )
    if c.source.order != g.order:
        raise CertificateError("colouring does not cover the vertices of g")
    _require_homomorphism(c.with_endpoints(power(g, 2 * k - 1), c.target), "colouring")
    _require_odd_girth(g, k)

    colour = [label_masks(c.target, c[v])[0] for v in range(g.order)]
    target = _helical_side(kind, m, n, k)
    index = _mask_index(target)
    assignment: List[int] = []
    for v in range(g.order):
        if not g.rows[v]:
            assignment.append(0)
            continue
        coordinates = []
        for layer in walk_masks(g, v, k - 1):
            union = 0
            for u in iter_bits(layer):
                union |= colour[u]
            coordinates.append(union)
        key = tuple(coordinates)
        _check_helical_tuple(key, m, n, k, v)
        _ensure(key in index, f"image of vertex {v} is not a vertex of {target.name}")
        assignment.append(index[key])

    f = VertexMap(source=g, target=target, assignment=tuple(assignment))
    _ensure(is_homomorphism(f), "encoded map is not a homomorphism", target=target.name)
    return f


def _check_helical_tuple(key: Tuple[int, ...], m: int, n: int, k: int, v: int) -> None:
    sets = tuple(subset_elements(mask) for mask in key)
    try:
        HelicalVertex(sets=sets, m=m, n=n, k=k)
    except ValueError as exc:
        raise InvariantViolation(
            f"image of vertex {v} violates the helical constraints: {exc}",
            details={"vertex": v, "image": [list(s) for s in sets]},
        ) from exc


@with_monitoring(ComponentName.HOM_ENGINE)
def decode_homb(f: VertexMap, k: int) -> VertexMap:
    """Turn ``f: g -> H(m,n,k)`` into ``c: g^(2k-1) -> KG(m,n)`` via ``c(v) = A_1``."""
    kind, m, n, depth = helical_parameters(f.target)
    if depth != k:
        raise InvalidParameterError(
            f"target {f.target.describe()} does not have k={k}", "k"
        )
    _require_homomorphism(f, "helical map")
    g = f.source
    _require_odd_girth(g, k)

    colour_graph = _kneser_side(kind, m, n)
    index = _mask_index(colour_graph)
    assignment = tuple(
        index[(label_masks(f.target, f[v])[0],)] for v in range(g.order)
    )
    c = VertexMap(
        source=power(g, 2 * k - 1), target=colour_graph, assignment=assignment
    )
    _ensure(is_homomorphism(c), "decoded colouring is not a homomorphism")
    return c


# Explicit colouring of Schrijver graph powers


def power_coloring_parameters(m: int, n: int, k: int) -> Tuple[int, int, int]:
    """``(a, b, block)`` for the explicit colouring of ``SG(a, b)^(2k-1)``."""
    spread = m - 2 * n + 2
    a = 2 * (k - 1) * m * spread + m
    b = (k - 1) * m * spread + n
    block = 2 * (k - 1) * spread + 1
    return a, b, block


def block_markers(m: int, n: int, k: int) -> List[int]:
    """Masks ``E_1..E_m``: every other element of each block, from its first."""
    _, _, block = power_coloring_parameters(m, n, k)
    markers = []
    for i in range(m):
        start = i * block
        markers.append(mask_of(start + offset for offset in range(0, block, 2)))
    return markers


@with_monitoring(ComponentName.HOM_ENGINE)
def schrijver_power_coloring(
    m: int, n: int, k: int, caps: Optional[SizeCaps] = None
) -> VertexMap:
    """Map ``SG(a,b)^(2k-1) -> SG(m,n)`` by the first ``n`` blocks whose markers fit."""
    if n < 1 or m < 2 * n:
        raise InvalidParameterError(f"need m >= 2n >= 2, got m={m}, n={n}", "m")
    if k < 1:
        raise InvalidParameterError(f"k must be positive, got {k}", "k")
    caps = caps or load_caps()
    a, b, _ = power_coloring_parameters(m, n, k)
    if a > caps.coloring_ground_set:
        raise CapExceededError("coloring_ground_set", caps.coloring_ground_set, a)

    source = schrijver(a, b, caps)
    target = schrijver(m, n, caps)
    index = _mask_index(target)
    markers = block_markers(m, n, k)
    assignment = []
    for v in range(source.order):
        u = label_masks(source, v)[0]
        chosen = [i for i, marker in enumerate(markers) if marker & ~u == 0][:n]
        _ensure(
            len(chosen) == n,
            f"vertex {subset_elements(u)} contains fewer than {n} marker sets",
            vertex=v,
        )
        colour = mask_of(chosen)
        _ensure(
            is_two_stable(colour, m),
            f"colour {subset_elements(colour)} is not 2-stable",
            vertex=v,
        )
        assignment.append(index[(colour,)])

    c = VertexMap(
        source=power(source, 2 * k - 1), target=target, assignment=tuple(assignment)
    )
    _ensure(is_homomorphism(c), "explicit colouring is not a homomorphism", a=a, b=b)
    logger.info("explicit colouring of SG(%s,%s)^%s verified", a, b, 2 * k - 1)
    return c


# Odd cycles and 2-subdivisions


def _cycle_positions(c: Graph) -> List[int]:
    """Position of every vertex along the cycle ``c``."""
    positions = [0] * c.order
    for t, v in enumerate(cycle_order(c)):
        positions[v] = t
    return positions


def _helical_cycle(k: int) -> Tuple[Graph, List[int]]:
    """``H(3,1,k+1)`` with its cyclic vertex order of length ``6k+3``."""
    h = helical(3, 1, k + 1)
    sequence = cycle_order(h)
    _ensure(len(sequence) == 6 * k + 3, f"H(3,1,{k + 1}) is not a {6 * k + 3}-cycle")
    return h, sequence


@with_monitoring(ComponentName.HOM_ENGINE)
def odd_cycle_transfer_forward(g: Graph, k: int, h: VertexMap) -> VertexMap:
    """From ``g -> C_{2k+1}`` to a proper 3-colouring of ``S_2(g)^(2k+1)``."""
    if k < 1:
        raise InvalidParameterError(f"k must be positive, got {k}", "k")
    if h.source.order != g.order or h.target.order != 2 * k + 1:
        raise CertificateError(f"expected a map from g to a {2 * k + 1}-cycle")
    _require_homomorphism(h.with_endpoints(g, h.target), "cycle map")
    _require_odd_girth(g, k)

    length = 6 * k + 3
    positions = _cycle_positions(h.target)
    s = subdivide(g, 2)
    image = [0] * s.order
    for v in range(g.order):
        image[v] = 3 * positions[h[v]]
    for index, (i, j) in enumerate(g.edges()):
        step = 1 if (positions[h[j]] - positions[h[i]]) % (2 * k + 1) == 1 else -1
        for p in (1, 2):
            inner = subdivision_index(g.order, 2, index, p)
            image[inner] = (image[i] + p * step) % length

    helical_graph, sequence = _helical_cycle(k)
    lifted = VertexMap(
        source=s, target=helical_graph, assignment=tuple(sequence[t] for t in image)
    )
    _ensure(is_homomorphism(lifted), "lift to the subdivision is not a homomorphism")
    colouring = decode_homb(lifted, k + 1)
    result = colouring.with_endpoints(colouring.source, complete(3))
    _ensure(is_homomorphism(result), "transferred 3-colouring is not proper")
    return result


@lru_cache(maxsize=8)
def cycle_power_witness(k: int) -> VertexMap:
    """A homomorphism ``C_{6k+3}^(3) -> C_{2k+1}`` found by search."""
    source = power(cycle(6 * k + 3), 3)
    witness = homomorphism(source, cycle(2 * k + 1))
    _ensure(witness is not None, f"no homomorphism C_{6 * k + 3}^(3) -> C_{2 * k + 1}")
    assert witness is not None
    return witness


@with_monitoring(ComponentName.HOM_ENGINE)
def odd_cycle_transfer_backward(g: Graph, k: int, col: VertexMap) -> VertexMap:
    """From a proper 3-colouring of ``S_2(g)^(2k+1)`` to ``g -> C_{2k+1}``."""
    if k < 1:
        raise InvalidParameterError(f"k must be positive, got {k}", "k")
    s = subdivide(g, 2)
    if col.source.order != s.order or col.target.order != 3:
        raise CertificateError("expected a 3-colouring of the subdivision power")
    _require_odd_girth(g, k)
    s_power = power(s, 2 * k + 1)
    _require_homomorphism(col.with_endpoints(s_power, complete(3)), "3-colouring")

    colouring = col.with_endpoints(s_power, kneser(3, 1))
    f = encode_homb(colouring, s, k + 1)

    length = 6 * k + 3
    _, sequence = _helical_cycle(k)
    position = {v: t for t, v in enumerate(sequence)}
    on_cycle = VertexMap(
        source=s,
        target=cycle(length),
        assignment=tuple(position[f[x]] for x in range(s.order)),
    )
    _ensure(power_lift_check(on_cycle, 3), "power lift of the cycle map failed")

    witness = cycle_power_witness(k)
    assignment = tuple(witness[on_cycle[v]] for v in range(g.order))
    result = VertexMap(source=g, target=cycle(2 * k + 1), assignment=assignment)
    _ensure(is_homomorphism(result), "transferred cycle map is not a homomorphism")
    return result
