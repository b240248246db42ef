"""Verification suites.

Every suite turns a statement about helical, Kneser and Schrijver graphs
into exact checks on concrete instances and returns the checked cases.
``verify`` merges the packaged defaults with caller overrides, runs one
suite and wraps its cases in a :class:`Report`.
"""

import logging
from fractions import Fraction
from math import comb
from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import Field

from ..chromatics import (
    candidate_ratios,
    chromatic_number,
    circular_chromatic,
    find_coloring,
    fractional_chromatic,
    local_chromatic,
)
from ..core.constants.family_kinds import FamilyKind
from ..core.errors import (
    CapExceededError,
    CertificateError,
    InvalidParameterError,
    InvariantViolation,
)
from ..core.models.base_models import BaseModel
from ..core.models.chromatic_models import Rational
from ..core.models.config_models import SizeCaps
from ..core.models.graph_models import Graph
from ..core.models.hom_models import VertexMap
from ..core.models.report_models import (
    CaseRecord,
    CaseVerdict,
    CorpusGenerator,
    CorpusSpec,
    Report,
)
from ..core.settings import load_caps, load_defaults
from ..graphs import (
    build_family,
    complete,
    complete_bipartite,
    count_helical_vertices,
    coxeter,
    cycle,
    helical,
    helical_parameters,
    hypercube,
    is_isomorphic,
    kneser,
    label_masks,
    odd_girth,
    petersen,
    power,
    schrijver,
    schrijver_helical,
    stable_helical,
    subdivide,
    walk_mask,
    while_reduce,
)
from ..hom import (
    count_homomorphisms,
    decode_homb,
    encode_homb,
    has_homomorphism,
    homomorphism,
    odd_cycle_transfer_backward,
    odd_cycle_transfer_forward,
    power_coloring_parameters,
    power_lift_check,
    schrijver_power_coloring,
)
from ..monitoring import ComponentName, with_monitoring
from ..utils.bitsets import iter_bits, popcount
from .corpus import generate_corpus
from .oracles import brute_force_chromatic, brute_force_hom_count

logger = logging.getLogger(__name__)

DEFAULT_EDGE_PROBABILITY = 0.3


class SuiteContext(BaseModel):
    """Resolved settings of one suite run."""

    parameters: Dict[str, Any] = Field(default_factory=dict)
    seed: int
    trials: int = Field(..., ge=0)
    caps: SizeCaps


SuiteFunction = Callable[[SuiteContext], List[CaseRecord]]
SUITES: Dict[str, SuiteFunction] = {}


def register_suite(name: str) -> Callable[[SuiteFunction], SuiteFunction]:
    def decorator(func: SuiteFunction) -> SuiteFunction:
        SUITES[name] = func
        return func

    return decorator


# Case helpers


def check_case(
    instance: str,
    check: str,
    expected: Any,
    observed: Any,
    witness: Optional[str] = None,
) -> CaseRecord:
    """A case that passes iff ``expected`` and ``observed`` print alike."""
    expected_text, observed_text = str(expected), str(observed)
    return CaseRecord(
        instance=instance,
        check=check,
        expected=expected_text,
        observed=observed_text,
        verdict=(
            CaseVerdict.PASS if expected_text == observed_text else CaseVerdict.FAIL
        ),
        witness=witness,
    )


def guarded(
    instance: str, check: str, body: Callable[..., CaseRecord], *args: Any
) -> CaseRecord:
    """Run ``body``; size caps make the case indeterminate, broken proofs fail it."""
    try:
        return body(*args)
    except CapExceededError as exc:
        logger.info("%s %s hit a size cap: %s", instance, check, exc.message)
        return CaseRecord(
            instance=instance,
            check=check,
            observed=exc.message,
            verdict=CaseVerdict.INDETERMINATE,
        )
    except (InvariantViolation, CertificateError) as exc:
        logger.warning("%s %s failed: %s", instance, check, exc.message)
        return CaseRecord(
            instance=instance,
            check=check,
            observed=exc.message,
            verdict=CaseVerdict.FAIL,
        )


def witness_text(f: VertexMap) -> str:
    if f.source.order <= 32:
        return f"{f.target.describe()}:" + ",".join(str(x) for x in f.assignment)
    return f"{f.target.describe()}:map of {f.source.order} vertices"


def _instance(g: Graph) -> str:
    return g.name or g.describe()


def corpus(
    ctx: SuiteContext,
    floor: int,
    max_order: int,
    generator: CorpusGenerator = CorpusGenerator.GNP_ODD_GIRTH,
) -> List[Graph]:
    spec = CorpusSpec(
        generator=generator,
        count=ctx.trials,
        min_order=1,
        max_order=max_order,
        odd_girth_floor=floor,
        edge_probability=ctx.parameters.get(
            "edge_probability", DEFAULT_EDGE_PROBABILITY
        ),
        seed=ctx.seed,
    )
    return generate_corpus(spec, ctx.caps)


# Helical bounds


def _transfer_case(
    g: Graph, k: int, colour_target: Graph, helical_target: Graph, check: str
) -> CaseRecord:
    c = homomorphism(power(g, 2 * k - 1), colour_target)
    f = homomorphism(g, helical_target)
    if (c is None) != (f is None):
        return CaseRecord(
            instance=_instance(g),
            check=check,
            expected="equivalent",
            observed=f"power side {c is not None}, helical side {f is not None}",
            verdict=CaseVerdict.FAIL,
            witness=witness_text(c or f),  # type: ignore[arg-type]
        )
    witness = None
    if c is not None and f is not None:
        encoded = encode_homb(c, g, k)
        decode_homb(f, k)
        witness = witness_text(encoded)
    return CaseRecord(
        instance=_instance(g),
        check=check,
        expected="equivalent",
        observed="equivalent",
        verdict=CaseVerdict.PASS,
        witness=witness,
    )


def _helical_bound_cases(ctx: SuiteContext, stable: bool) -> List[CaseRecord]:
    cases = []
    for k in ctx.parameters["k"]:
        graphs = corpus(ctx, 2 * k + 1, ctx.parameters["max_order"])
        for m, n in ctx.parameters["pairs"]:
            if stable:
                colour_target = schrijver(m, n, ctx.caps)
                helical_target = schrijver_helical(m, n, k, ctx.caps)
            else:
                colour_target = kneser(m, n, ctx.caps)
                helical_target = helical(m, n, k, ctx.caps)
            check = f"power->{colour_target.name} iff ->{helical_target.name}"
            for g in graphs:
                cases.append(
                    guarded(
                        _instance(g),
                        check,
                        _transfer_case,
                        g,
                        k,
                        colour_target,
                        helical_target,
                        check,
                    )
                )
    return cases


@register_suite("homb")
def homb_suite(ctx: SuiteContext) -> List[CaseRecord]:
    """``g^(2k-1) -> KG(m,n)`` iff ``g -> H(m,n,k)``, both transfers checked."""
    return _helical_bound_cases(ctx, stable=False)


@register_suite("shomb")
def shomb_suite(ctx: SuiteContext) -> List[CaseRecord]:
    """Schrijver flavour of ``homb``."""
    return _helical_bound_cases(ctx, stable=True)


# Chromatic numbers


def _chromatic_case(g: Graph, ctx: SuiteContext) -> CaseRecord:
    _, m, n, _ = helical_parameters(g)
    result = chromatic_number(g, ctx.caps)
    assert result.certificate is not None
    if result.certificate.violations():
        raise InvariantViolation(f"colouring of {g.name} is improper")
    return check_case(
        _instance(g),
        "chromatic number = m-2n+2",
        m - 2 * n + 2,
        result.integer_value,
        witness=f"refuted={','.join(result.refuted) or '-'}",
    )


@register_suite("chrom")
def chrom_suite(ctx: SuiteContext) -> List[CaseRecord]:
    cases = []
    for descriptor in ctx.parameters["instances"]:
        g = build_family(descriptor, ctx.caps)
        cases.append(
            guarded(descriptor, "chromatic number = m-2n+2", _chromatic_case, g, ctx)
        )
    return cases


def _power_coloring_case(m: int, n: int, k: int, ctx: SuiteContext) -> CaseRecord:
    c = schrijver_power_coloring(m, n, k, ctx.caps)
    return check_case(
        c.target.describe(),
        f"explicit colouring of the {2 * k - 1}-th power",
        0,
        len(c.violations()),
        witness=witness_text(c),
    )


@register_suite("chrom-coloring")
def chrom_coloring_suite(ctx: SuiteContext) -> List[CaseRecord]:
    """The block-marker colouring of ``SG(a,b)^(2k-1)`` into ``SG(m,n)``."""
    m, n, k = (ctx.parameters[key] for key in ("m", "n", "k"))
    a, b, _ = power_coloring_parameters(m, n, k)
    instance = f"SG:{a},{b}"
    cases = [
        guarded(
            instance,
            "vertex count",
            lambda: check_case(
                instance,
                "vertex count",
                a * comb(a - b, b) // (a - b),
                schrijver(a, b, ctx.caps).order,
            ),
        ),
        guarded(
            instance,
            f"explicit colouring into SG:{m},{n}",
            _power_coloring_case,
            m,
            n,
            k,
            ctx,
        ),
    ]
    return cases


# Odd cycles and subdivisions


def _odd_cycle_case(g: Graph, k: int, ctx: SuiteContext, check: str) -> CaseRecord:
    h = homomorphism(g, cycle(2 * k + 1))
    col = find_coloring(power(subdivide(g, 2), 2 * k + 1), 3, ctx.caps)
    if (h is None) != (col is None):
        return CaseRecord(
            instance=_instance(g),
            check=check,
            expected="equivalent",
            observed=f"cycle map {h is not None}, 3-colouring {col is not None}",
            verdict=CaseVerdict.FAIL,
        )
    witness = None
    if h is not None and col is not None:
        odd_cycle_transfer_forward(g, k, h)
        back = odd_cycle_transfer_backward(g, k, col)
        witness = witness_text(back)
    return CaseRecord(
        instance=_instance(g),
        check=check,
        expected="equivalent",
        observed="equivalent",
        verdict=CaseVerdict.PASS,
        witness=witness,
    )


def _subdivided_triangle_case(ctx: SuiteContext) -> CaseRecord:
    g = power(subdivide(complete(3), 2), 3)
    return check_case(
        "K:3", "chromatic number of S2(g)^(3)", 3, chromatic_number(g, ctx.caps).value
    )


def _petersen_pentagon_case(ctx: SuiteContext) -> CaseRecord:
    p = petersen()
    to_pentagon = has_homomorphism(p, cycle(5))
    colourable = find_coloring(power(subdivide(p, 2), 5), 3, ctx.caps) is not None
    observed = "neither"
    if to_pentagon or colourable:
        observed = f"cycle map {to_pentagon}, 3-colouring {colourable}"
    return check_case("P", "C:5 map and 3-colouring of S2(g)^(5)", "neither", observed)


@register_suite("ocy")
def ocy_suite(ctx: SuiteContext) -> List[CaseRecord]:
    """``g -> C_(2k+1)`` iff ``S_2(g)^(2k+1)`` is 3-colourable."""
    cases = []
    for k in ctx.parameters["k"]:
        check = f"->C:{2 * k + 1} iff S2(g)^({2 * k + 1}) 3-colourable"
        for g in corpus(ctx, 2 * k + 1, ctx.parameters["max_order"]):
            cases.append(
                guarded(_instance(g), check, _odd_cycle_case, g, k, ctx, check)
            )
    cases.append(
        guarded(
            "K:3",
            "chromatic number of S2(g)^(3)",
            _subdivided_triangle_case,
            ctx,
        )
    )
    cases.append(
        guarded(
            "P",
            "C:5 map and 3-colouring of S2(g)^(5)",
            _petersen_pentagon_case,
            ctx,
        )
    )
    return cases


# Powers


@register_suite("m2")
def m2_suite(ctx: SuiteContext) -> List[CaseRecord]:
    """A homomorphism stays one between equal powers of source and target."""
    graphs = corpus(ctx, 3, ctx.parameters["max_order"])
    maps: List[VertexMap] = []
    for g in graphs:
        certificate = chromatic_number(g, ctx.caps).certificate
        if certificate is not None:
            maps.append(certificate)
    for g, h in zip(graphs, graphs[1:]):
        f = homomorphism(g, h)
        if f is not None:
            maps.append(f)

    cases = []
    for f in maps:
        instance = f"{_instance(f.source)}->{f.target.describe()}"
        for k in ctx.parameters["powers"]:
            cases.append(
                guarded(
                    instance,
                    f"lift to power {k}",
                    lambda f=f, k=k, instance=instance: check_case(
                        instance, f"lift to power {k}", True, power_lift_check(f, k)
                    ),
                )
            )
    return cases


def _coxeter_heptagon_case() -> CaseRecord:
    cox = coxeter()
    # C:7 is vertex-transitive, so vertex 0 may be sent to 0
    f = homomorphism(cox, cycle(7), pinned={0: 1})
    return check_case(
        "Cox",
        "map Cox -> C:7",
        False,
        f is not None,
        witness=witness_text(f) if f is not None else None,
    )


@register_suite("m2-consequences")
def m2_consequences_suite(ctx: SuiteContext) -> List[CaseRecord]:
    """Petersen: chi_c = chi and no C:5 map. Coxeter: no C:7 map."""
    p = petersen()
    cube = power(p, 3)
    pentagon_cube = power(cycle(5), 3)
    return [
        guarded(
            "P",
            "chromatic number",
            lambda: check_case("P", "chromatic number", 3, chromatic_number(p).value),
        ),
        guarded(
            "P",
            "circular chromatic number",
            lambda: check_case(
                "P", "circular chromatic number", 3, circular_chromatic(p).value
            ),
        ),
        guarded(
            "P",
            "map of cubes P^(3) -> C5^(3)",
            lambda: check_case(
                "P",
                "map of cubes P^(3) -> C5^(3)",
                False,
                has_homomorphism(cube, pentagon_cube),
            ),
        ),
        guarded(
            "P",
            "map P -> C:5",
            lambda: check_case(
                "P", "map P -> C:5", False, has_homomorphism(p, cycle(5))
            ),
        ),
        guarded(
            "Cox",
            "odd girth",
            lambda: check_case("Cox", "odd girth", 7, odd_girth(coxeter())),
        ),
        guarded("Cox", "map Cox -> C:7", _coxeter_heptagon_case),
    ]


# Schrijver distance lemma


def _distance_violations(g: Graph, s: int, bound: int) -> int:
    violations = 0
    for u in range(g.order):
        mask_u = label_masks(g, u)[0]
        for v in iter_bits(walk_mask(g, u, 2 * s)):
            if popcount(mask_u & ~label_masks(g, v)[0]) > bound:
                violations += 1
    return violations


@register_suite("dist")
def dist_suite(ctx: SuiteContext) -> List[CaseRecord]:
    """``|u - v| <= s(a-2b+2)`` for walks of length ``2s`` in ``SG(a,b)``."""
    cases = []
    for a, b in ctx.parameters["pairs"]:
        g = schrijver(a, b, ctx.caps)
        for s in range(1, ctx.parameters["max_s"] + 1):
            bound = s * (a - 2 * b + 2)
            check = f"walks of length {2 * s}: |u-v| <= {bound}"
            violations = _distance_violations(g, s, bound)
            cases.append(check_case(_instance(g), check, 0, violations))
    return cases


# Dominated-vertex reduction


def _while_cases(m: int, n: int, k: int, ctx: SuiteContext) -> List[CaseRecord]:
    g = schrijver_helical(m, n, k, ctx.caps)
    reduced, trace = while_reduce(g)
    instance = _instance(g)
    expected = stable_helical(m, n, k, ctx.caps)
    assert expected.labels is not None and reduced.labels is not None
    observed = f"{reduced.order} vertices"
    if set(reduced.labels) != set(expected.labels):
        observed += " (labels differ)"
    cases = [
        check_case(instance, "survivors are SH", f"{expected.order} vertices", observed)
    ]
    position = {v: i for i, v in enumerate(trace.survivors)}
    retraction = VertexMap(
        source=g,
        target=reduced,
        assignment=tuple(position[r] for r in trace.retraction),
    )
    cases.append(
        check_case(
            instance, "retraction is a homomorphism", 0, len(retraction.violations())
        )
    )
    if (m, n, k) == (7, 2, 2):
        removed = g.index_of(((1, 3), (4, 5, 6, 7)))
        witnesses = [v for u, v in trace.removed if u == removed]
        observed = g.label(witnesses[0]) if witnesses else "not removed"
        cases.append(
            check_case(
                instance,
                "({1,3},{4,5,6,7}) removed with witness",
                ((1, 3), (2, 4, 5, 6, 7)),
                observed,
            )
        )
    return cases


def while_sweep(max_order: int, max_m: int, max_k: int) -> List[Tuple[int, int, int]]:
    """Parameters with at most ``max_order`` vertices in ``SG(m,n,k)``."""
    sweep = []
    for m in range(2, max_m + 1):
        for n in range(1, m // 2 + 1):
            for k in range(1, max_k + 1):
                size = count_helical_vertices(
                    m, n, k, FamilyKind.SCHRIJVER_HELICAL, limit=max_order
                )
                if size <= max_order:
                    sweep.append((m, n, k))
    return sweep


@register_suite("while-sh")
def while_sh_suite(ctx: SuiteContext) -> List[CaseRecord]:
    """Reducing ``SG(m,n,k)`` by dominated vertices leaves ``SH(m,n,k)``."""
    cases: List[CaseRecord] = []
    sweep = while_sweep(
        ctx.parameters["max_order"], ctx.parameters["max_m"], ctx.parameters["max_k"]
    )
    for m, n, k in sweep:
        instance = f"SGk:{m},{n},{k}"
        try:
            cases.extend(_while_cases(m, n, k, ctx))
        except CapExceededError as exc:
            cases.append(
                CaseRecord(
                    instance=instance,
                    check="survivors are SH",
                    observed=exc.message,
                    verdict=CaseVerdict.INDETERMINATE,
                )
            )
    return cases


# Circular chromatic numbers


def _partial_circular_case(g: Graph, qcap: int, ctx: SuiteContext) -> CaseRecord:
    _, m, n, _ = helical_parameters(g)
    expected = m - 2 * n + 2
    result = circular_chromatic(g, qcap, ctx.caps)
    scanned = candidate_ratios(expected, min(qcap, g.order))
    upper = result.value if result.exact else result.upper
    observed = f"upper {upper}, {len(result.refuted)} of {len(scanned)} ratios refuted"
    return check_case(
        _instance(g),
        f"no K_(p,q) with p/q < {expected} and q <= {qcap}",
        f"upper {expected}, {len(scanned)} of {len(scanned)} ratios refuted",
        observed,
        witness=",".join(result.refuted) or None,
    )


@register_suite("cirhel-partial")
def cirhel_partial_suite(ctx: SuiteContext) -> List[CaseRecord]:
    descriptor = ctx.parameters["instance"]
    qcap = ctx.parameters["qcap"]
    g = build_family(descriptor, ctx.caps)
    return [
        guarded(descriptor, "chromatic number = m-2n+2", _chromatic_case, g, ctx),
        guarded(
            descriptor,
            f"no K_(p,q) with small p/q and q <= {qcap}",
            _partial_circular_case,
            g,
            qcap,
            ctx,
        ),
    ]


def _circular_case(g: Graph, expected: Fraction, ctx: SuiteContext) -> CaseRecord:
    result = circular_chromatic(g, caps=ctx.caps)
    assert result.certificate is not None
    if result.certificate.violations():
        raise InvariantViolation(f"circular colouring of {g.name} is improper")
    return check_case(
        _instance(g),
        "circular chromatic number",
        f"{Fraction(expected)} exact",
        f"{result.summary()} {'exact' if result.exact else 'bounds'}",
        witness=witness_text(result.certificate),
    )


@register_suite("circular")
def circular_suite(ctx: SuiteContext) -> List[CaseRecord]:
    instances = [(helical(3, 1, 2, ctx.caps), Fraction(9, 4))]
    for r in range(1, ctx.parameters["max_r"] + 1):
        instances.append((cycle(2 * r + 1), Fraction(2 * r + 1, r)))
    return [
        guarded(
            _instance(g), "circular chromatic number", _circular_case, g, value, ctx
        )
        for g, value in instances
    ]


# Conjectured bounds

FRACTIONAL_SUBCUBIC_BOUND = Fraction(14, 5)


def _fractional_subcubic_case(g: Graph, ctx: SuiteContext) -> CaseRecord:
    og = odd_girth(g)
    if max((g.degree(v) for v in range(g.order)), default=0) > 3 or og == 3:
        raise InvariantViolation(
            f"{g.describe()} is not a triangle-free subcubic graph"
        )
    value = fractional_chromatic(g, ctx.caps).value
    assert value is not None
    return CaseRecord(
        instance=_instance(g),
        check="chi_f <= 14/5",
        expected=f"<= {Rational.of(FRACTIONAL_SUBCUBIC_BOUND)}",
        observed=str(value),
        verdict=(
            CaseVerdict.PASS
            if value.fraction <= FRACTIONAL_SUBCUBIC_BOUND
            else CaseVerdict.FAIL
        ),
    )


@register_suite("conjectures")
def conjectures_suite(ctx: SuiteContext) -> List[CaseRecord]:
    """Small-instance checks of two chromatic bounds.

    Triangle-free subcubic graphs have ``chi_f <= 14/5``; small Kneser graphs
    admit no ``K_(p,q)`` colouring with ``p/q < chi`` and ``q <= qcap``.
    """
    graphs = [cycle(5), cycle(7), petersen(), hypercube(3), complete_bipartite(3, 3)]
    graphs += corpus(ctx, 5, ctx.parameters["max_order"], CorpusGenerator.RANDOM_CUBIC)
    cases = [
        guarded(_instance(g), "chi_f <= 14/5", _fractional_subcubic_case, g, ctx)
        for g in graphs
    ]
    qcap = ctx.parameters["qcap"]
    for m, n in ctx.parameters["kneser"]:
        g = kneser(m, n, ctx.caps)
        cases.append(
            guarded(
                _instance(g),
                f"no K_(p,q) with p/q < chi and q <= {qcap}",
                _partial_circular_case,
                g,
                qcap,
                ctx,
            )
        )
    return cases


# Family identities


@register_suite("families")
def families_suite(ctx: SuiteContext) -> List[CaseRecord]:
    """Small helical and Schrijver graphs are the expected classical graphs."""
    pairs: List[Tuple[Graph, Graph]] = []
    low, high = ctx.parameters["complete_range"]
    for m in range(low, high + 1):
        pairs.append((helical(m, 1, 1, ctx.caps), complete(m)))
    pairs.append((helical(5, 2, 1, ctx.caps), kneser(5, 2, ctx.caps)))
    pairs.append((helical(3, 1, 2, ctx.caps), cycle(9)))
    low, high = ctx.parameters["schrijver_cycles"]
    for n in range(low, high + 1):
        pairs.append((schrijver(2 * n + 1, n, ctx.caps), cycle(2 * n + 1)))

    cases = [
        guarded(
            _instance(g),
            f"isomorphic to {h.name}",
            lambda g=g, h=h: check_case(
                _instance(g),
                f"isomorphic to {h.name}",
                True,
                is_isomorphic(g, h, ctx.caps),
            ),
        )
        for g, h in pairs
    ]
    h512 = helical(5, 2, 1, ctx.caps)
    cases.append(
        check_case(
            _instance(h512),
            "labels and adjacency equal KG:5,2",
            True,
            h512.same_adjacency(kneser(5, 2)) and h512.labels == kneser(5, 2).labels,
        )
    )
    cases.append(check_case("H:5,1,2", "vertex count", 75, helical(5, 1, 2).order))
    return cases


# Parameter chains


def parameter_cases(g: Graph, caps: SizeCaps) -> List[CaseRecord]:
    """Compute the four parameters of ``g`` and check their order."""
    instance = _instance(g)
    chi = chromatic_number(g, caps).value
    fractional = fractional_chromatic(g, caps).value
    local = local_chromatic(g, caps).value
    assert chi is not None and fractional is not None and local is not None
    observed = [f"chi={chi}", f"chi_f={fractional}", f"psi={local}"]
    holds = fractional <= local <= chi
    if g.edge_count:
        circular = circular_chromatic(g, caps=caps).value
        assert circular is not None
        observed.append(f"chi_c={circular}")
        holds = holds and chi.fraction - 1 < circular.fraction and circular <= chi
    return [
        CaseRecord(
            instance=instance,
            check="chi_f <= psi <= chi and chi-1 < chi_c <= chi",
            expected="holds",
            observed=" ".join(observed),
            verdict=CaseVerdict.PASS if holds else CaseVerdict.FAIL,
        )
    ]


@register_suite("sanity")
def sanity_suite(ctx: SuiteContext) -> List[CaseRecord]:
    graphs = [cycle(9), cycle(5), cycle(6), complete(4), petersen()]
    graphs += corpus(ctx, 3, ctx.parameters["max_order"])
    cases: List[CaseRecord] = []
    for g in graphs:
        try:
            cases.extend(parameter_cases(g, ctx.caps))
        except CapExceededError as exc:
            cases.append(
                CaseRecord(
                    instance=_instance(g),
                    check="chi_f <= psi <= chi and chi-1 < chi_c <= chi",
                    observed=exc.message,
                    verdict=CaseVerdict.INDETERMINATE,
                )
            )
    c9 = cycle(9)
    cases.append(
        check_case(
            "C:9",
            "chi_f = chi_c = 9/4 and psi = 3",
            "9/4 9/4 3",
            f"{fractional_chromatic(c9, ctx.caps).value} "
            f"{circular_chromatic(c9, caps=ctx.caps).value} "
            f"{local_chromatic(c9, ctx.caps).value}",
        )
    )
    return cases


@register_suite("psi-power-bound")
def psi_power_bound_suite(ctx: SuiteContext) -> List[CaseRecord]:
    """``psi(g) <= floor(chi(g^(5)) / 2) + 2`` for odd girth at least 7."""
    cases = []
    for g in corpus(ctx, 7, ctx.parameters["max_order"]):
        instance = _instance(g)

        def body(g: Graph = g, instance: str = instance) -> CaseRecord:
            fifth = chromatic_number(power(g, 5), ctx.caps).integer_value
            local = local_chromatic(g, ctx.caps).integer_value
            bound = fifth // 2 + 2
            return CaseRecord(
                instance=instance,
                check="psi <= floor(chi(g^(5))/2) + 2",
                expected=f"<= {bound}",
                observed=str(local),
                verdict=CaseVerdict.PASS if local <= bound else CaseVerdict.FAIL,
            )

        cases.append(guarded(instance, "psi <= floor(chi(g^(5))/2) + 2", body))
    return cases


# Oracles


@register_suite("oracle")
def oracle_suite(ctx: SuiteContext) -> List[CaseRecord]:
    """Search engines against exhaustive enumeration on small graphs."""
    cases = []
    small = corpus(ctx, 3, ctx.parameters["max_hom_order"])
    for g, h in zip(small, small[1:]):
        instance = f"{_instance(g)}->{_instance(h)}"
        cases.append(
            check_case(
                instance,
                "homomorphism count",
                brute_force_hom_count(g, h),
                count_homomorphisms(g, h),
            )
        )
    for g in corpus(ctx, 3, ctx.parameters["max_chromatic_order"]):
        cases.append(
            check_case(
                _instance(g),
                "chromatic number",
                brute_force_chromatic(g),
                chromatic_number(g, ctx.caps).integer_value,
            )
        )
    return cases


@with_monitoring(ComponentName.HARNESS)
def verify(
    suite: str,
    parameters: Optional[Dict[str, Any]] = None,
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    caps: Optional[SizeCaps] = None,
) -> Report:
    """Run one suite with the packaged defaults overridden by ``parameters``."""
    if suite not in SUITES:
        raise InvalidParameterError(
            f"unknown suite {suite!r} (known: {', '.join(sorted(SUITES))})", "suite"
        )
    defaults = load_defaults()
    merged = defaults.parameters_for(suite)
    merged.update(parameters or {})
    ctx = SuiteContext(
        parameters=merged,
        seed=defaults.seed if seed is None else seed,
        trials=defaults.trials_for(suite) if trials is None else trials,
        caps=caps or load_caps(),
    )
    logger.info("running suite %s (seed %s, trials %s)", suite, ctx.seed, ctx.trials)
    cases = SUITES[suite](ctx)
    report = Report.build(
        suite, cases, parameters={**merged, "trials": ctx.trials}, seed=ctx.seed
    )
    logger.info(
        "suite %s: %s with %s cases", suite, report.verdict.value, len(report.cases)
    )
    return report
