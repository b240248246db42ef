"""Circular chromatic number by scanning circular complete targets."""

import logging
from fractions import Fraction
from math import gcd
from typing import List, Optional

from ..core.errors import InvalidParameterError
from ..core.models.chromatic_models import ChromaticResult, Rational
from ..core.models.config_models import SizeCaps
from ..core.models.graph_models import Graph
from ..core.models.hom_models import VertexMap
from ..graphs.families import circular_complete
from ..graphs.reduction import while_reduce
from ..hom.solver import homomorphism
from ..monitoring import ComponentName, with_monitoring
from .coloring import chromatic_number, lift_assignment, require_loop_free

logger = logging.getLogger(__name__)


def candidate_ratios(chi: int, max_denominator: int) -> List[Fraction]:
    """Reduced ``p/q`` with ``q <= max_denominator`` and ``chi - 1 < p/q < chi``.

    Ratios at or below ``chi - 1`` cannot be circular colourings of a graph
    with chromatic number ``chi``.
    """
    ratios = {
        Fraction(p, q)
        for q in range(1, max_denominator + 1)
        for p in range((chi - 1) * q + 1, chi * q)
        if gcd(p, q) == 1 and p >= 2 * q
    }
    return sorted(ratios)


@with_monitoring(ComponentName.CHROMATICS)
def circular_chromatic(
    g: Graph, denominator_cap: Optional[int] = None, caps: Optional[SizeCaps] = None
) -> ChromaticResult:
    """Smallest ``p/q`` with ``g -> K_(p,q)`` over the scanned denominators.

    With ``denominator_cap >= |V(g)|`` (the default) the scan is complete and
    the result exact. Otherwise the first success is an upper bound and the
    largest failed ratio a strict lower bound, since ``K_(p',q') -> K_(p,q)``
    whenever ``p'/q' <= p/q``.
    """
    require_loop_free(g, "the circular chromatic number")
    if g.edge_count == 0:
        raise InvalidParameterError(
            f"circular chromatic number of edgeless {g.describe()} is degenerate", "g"
        )
    if denominator_cap is not None and denominator_cap < 1:
        raise InvalidParameterError(
            f"denominator cap must be positive, got {denominator_cap}",
            "denominator_cap",
        )
    cap = g.order if denominator_cap is None else denominator_cap
    exact = cap >= g.order

    chromatic = chromatic_number(g, caps)
    chi = chromatic.integer_value
    assert chromatic.certificate is not None

    reduced, trace = while_reduce(g)
    anchor = next(v for v in range(reduced.order) if reduced.rows[v])
    best = Fraction(chi)
    certificate = VertexMap(
        source=g,
        target=circular_complete(chi, 1),
        assignment=chromatic.certificate.assignment,
    )
    refuted: List[str] = []
    lower = Fraction(chi - 1)
    for ratio in candidate_ratios(chi, min(cap, g.order)):
        target = circular_complete(ratio.numerator, ratio.denominator)
        # the target is vertex-transitive, so one vertex may be fixed
        found = homomorphism(reduced, target, pinned={anchor: 1})
        if found is None:
            refuted.append(str(Rational.of(ratio)))
            lower = ratio
            continue
        best = ratio
        certificate = VertexMap(
            source=g,
            target=target,
            assignment=tuple(lift_assignment(trace, found.assignment)),
        )
        break

    logger.debug(
        "circular chromatic of %s: %s (exact=%s, refuted %s)",
        g.describe(),
        best,
        exact,
        refuted,
    )
    if exact:
        return ChromaticResult(
            parameter="circular",
            value=Rational.of(best),
            certificate=certificate,
            refuted=tuple(refuted),
        )
    return ChromaticResult(
        parameter="circular",
        exact=False,
        lower=Rational.of(lower),
        upper=Rational.of(best),
        lower_strict=True,
        certificate=certificate,
        refuted=tuple(refuted),
    )
