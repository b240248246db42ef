"""Data-gathering probes for open questions.

Probe cases are ``recorded`` rather than judged, except for internal
cross-checks between answers that a proven equivalence ties together.
"""

import logging
from fractions import Fraction
from typing import Callable, Iterable, List, Optional

from ..chromatics import chromatic_number, find_coloring
from ..core.errors import CapExceededError
from ..core.models.chromatic_models import Rational
from ..core.models.config_models import SizeCaps
from ..core.models.graph_models import Graph
from ..core.models.report_models import CaseRecord, CaseVerdict, Report
from ..core.settings import load_caps
from ..graphs import cycle, cycle_stats, helical, power, subdivide
from ..hom import has_homomorphism
from ..monitoring import ComponentName, with_monitoring
from .suites import parameter_cases

logger = logging.getLogger(__name__)


def _recorded(instance: str, check: str, observed: object) -> CaseRecord:
    return CaseRecord(
        instance=instance,
        check=check,
        observed=str(observed),
        verdict=CaseVerdict.RECORDED,
    )


def _attempt(instance: str, check: str, compute: Callable[[], object]) -> CaseRecord:
    """Record ``compute()``; a size cap leaves the entry indeterminate."""
    try:
        return _recorded(instance, check, compute())
    except CapExceededError as exc:
        return CaseRecord(
            instance=instance,
            check=check,
            observed=exc.message,
            verdict=CaseVerdict.INDETERMINATE,
        )


def _is_cubic(g: Graph) -> bool:
    return all(g.degree(v) == 3 for v in range(g.order))


def _chromatic_or_loops(g: Graph, caps: SizeCaps) -> str:
    if g.has_loops:
        return "undefined (loops)"
    return str(chromatic_number(g, caps).value)


@with_monitoring(ComponentName.HARNESS)
def pentagon_probe(g: Graph, caps: Optional[SizeCaps] = None) -> Report:
    """Girth, maps to ``C:5`` and helical graphs, and related colourings of ``g``.

    When the odd girth is at least 5 a map to ``C:5`` exists iff ``S_2(g)^(5)``
    is 3-colourable; that agreement is the one judged case.
    """
    caps = caps or load_caps()
    instance = g.describe()
    if not _is_cubic(g):
        logger.warning("pentagon probe on %s: the graph is not cubic", instance)
    stats = cycle_stats(g)
    to_pentagon = has_homomorphism(g, cycle(5))
    cases = [
        _recorded(instance, "girth", stats.girth or "infinite"),
        _recorded(instance, "odd girth", stats.odd_girth or "infinite"),
        _recorded(instance, "map to C:5", to_pentagon),
    ]

    colourable: Optional[bool] = None
    try:
        subdivided = power(subdivide(g, 2), 5)
        colourable = (
            not subdivided.has_loops
            and find_coloring(subdivided, 3, caps) is not None
        )
        cases.append(_recorded(instance, "S2(g)^(5) 3-colourable", colourable))
    except CapExceededError as exc:
        cases.append(
            CaseRecord(
                instance=instance,
                check="S2(g)^(5) 3-colourable",
                observed=exc.message,
                verdict=CaseVerdict.INDETERMINATE,
            )
        )
    cases.append(
        _attempt(
            instance,
            "chromatic number of g^(3)",
            lambda: _chromatic_or_loops(power(g, 3), caps),
        )
    )
    for m in (5, 4):
        target = helical(m, 1, 2, caps)
        cases.append(
            _attempt(
                instance,
                f"map to {target.name}",
                lambda target=target: has_homomorphism(g, target),
            )
        )

    if colourable is not None and (stats.odd_girth is None or stats.odd_girth >= 5):
        agree = colourable == to_pentagon
        cases.append(
            CaseRecord(
                instance=instance,
                check="map to C:5 iff S2(g)^(5) 3-colourable",
                expected="agree",
                observed="agree" if agree else "disagree",
                verdict=CaseVerdict.PASS if agree else CaseVerdict.FAIL,
            )
        )
    return Report.build("probe-pentagon", cases, parameters={"graph": instance})


@with_monitoring(ComponentName.HARNESS)
def subdivision_power_scan(
    g: Graph,
    k_values: Iterable[int],
    t_values: Iterable[int],
    caps: Optional[SizeCaps] = None,
) -> Report:
    """``chi(S_2t(g)^(2k+1))`` over a grid, with the ratio ``(2k+1)/(2t+1)``."""
    caps = caps or load_caps()
    instance = g.describe()
    ks, ts = sorted(set(k_values)), sorted(set(t_values))
    chi = chromatic_number(g, caps).integer_value
    cases = [_recorded(instance, "chromatic number", chi)]
    for k in ks:
        for t in ts:
            check = f"k={k} t={t}"
            ratio = Rational.of(Fraction(2 * k + 1, 2 * t + 1))
            try:
                h = power(subdivide(g, 2 * t), 2 * k + 1)
                if h.has_loops:
                    observed = f"undefined (loops), ratio {ratio}"
                else:
                    value = chromatic_number(h, caps).integer_value
                    observed = (
                        f"chi={value}, ratio {ratio}, "
                        f"{'equals' if value == chi else 'differs from'} chi(g)"
                    )
                cases.append(_recorded(instance, check, observed))
            except CapExceededError as exc:
                cases.append(
                    CaseRecord(
                        instance=instance,
                        check=check,
                        observed=exc.message,
                        verdict=CaseVerdict.INDETERMINATE,
                    )
                )
    return Report.build(
        "scan",
        cases,
        parameters={"graph": instance, "k": ks, "t": ts},
    )


@with_monitoring(ComponentName.HARNESS)
def parameter_probe(g: Graph, caps: Optional[SizeCaps] = None) -> Report:
    """Chromatic, circular, fractional and local chromatic numbers of ``g``."""
    caps = caps or load_caps()
    try:
        cases: List[CaseRecord] = parameter_cases(g, caps)
    except CapExceededError as exc:
        cases = [
            CaseRecord(
                instance=g.describe(),
                check="chi_f <= psi <= chi and chi-1 < chi_c <= chi",
                observed=exc.message,
                verdict=CaseVerdict.INDETERMINATE,
            )
        ]
    return Report.build("probe-parameters", cases, parameters={"graph": g.describe()})
