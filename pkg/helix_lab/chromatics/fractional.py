"""Fractional chromatic number by exact rational linear programming.

The covering program ``min sum x_I`` subject to ``sum_{I ni v} x_I >= 1``
ranges over the maximal independent sets ``I``. Its dual
``max sum y_v`` subject to ``sum_{v in I} y_v <= 1`` starts feasible at the
origin, so it is solved directly by the simplex method on sparse
``Fraction`` rows with Bland's rule. The primal weights are read off the
final reduced costs of the slack columns and both solutions are verified.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..core.errors import InvariantViolation
from ..core.models.chromatic_models import ChromaticResult, Rational
from ..core.models.config_models import SizeCaps
from ..core.models.graph_models import Graph
from ..monitoring import ComponentName, with_monitoring
from ..utils.bitsets import iter_bits, lowest_bit
from .coloring import check_order_cap, require_loop_free

logger = logging.getLogger(__name__)

Row = Dict[int, Fraction]


def maximal_independent_sets(g: Graph) -> List[Tuple[int, ...]]:
    """Maximal independent sets in lexicographic order (Bron-Kerbosch)."""
    non_adjacent = [g.all_vertices & ~g.rows[v] & ~(1 << v) for v in range(g.order)]
    found: List[Tuple[int, ...]] = []

    def expand(chosen: int, candidates: int, excluded: int) -> None:
        if not candidates and not excluded:
            found.append(tuple(iter_bits(chosen)))
            return
        pivot = lowest_bit(candidates | excluded)
        for v in iter_bits(candidates & ~non_adjacent[pivot]):
            expand(
                chosen | (1 << v),
                candidates & non_adjacent[v],
                excluded & non_adjacent[v],
            )
            candidates &= ~(1 << v)
            excluded |= 1 << v

    if g.order:
        expand(0, g.all_vertices, 0)
    return sorted(found)


class _DualSimplex:
    """Tableau for ``max 1.y`` with one ``<= 1`` row per independent set."""

    def __init__(self, order: int, sets: List[Tuple[int, ...]]):
        self.order = order
        self.rows: List[Row] = []
        self.rhs: List[Fraction] = []
        self.basis: List[int] = []
        for i, members in enumerate(sets):
            row = {v: Fraction(1) for v in members}
            row[order + i] = Fraction(1)
            self.rows.append(row)
            self.rhs.append(Fraction(1))
            self.basis.append(order + i)
        self.costs: Row = {v: Fraction(1) for v in range(order)}
        self.value = Fraction(0)
        self.pivots = 0

    def _entering(self) -> Optional[int]:
        improving = [j for j, c in self.costs.items() if c > 0]
        return min(improving) if improving else None

    def _leaving(self, column: int) -> int:
        best: Optional[Tuple[Fraction, int, int]] = None
        for r, row in enumerate(self.rows):
            a = row.get(column)
            if a is None or a <= 0:
                continue
            key = (self.rhs[r] / a, self.basis[r], r)
            if best is None or key < best:
                best = key
        if best is None:
            raise InvariantViolation(
                "covering dual is unbounded", details={"column": column}
            )
        return best[2]

    def _pivot(self, r: int, column: int) -> None:
        a = self.rows[r][column]
        pivot_row = {j: c / a for j, c in self.rows[r].items()}
        self.rows[r] = pivot_row
        self.rhs[r] /= a
        for i, row in enumerate(self.rows):
            f = row.get(column)
            if i == r or f is None:
                continue
            for j, c in pivot_row.items():
                updated = row.get(j, Fraction(0)) - f * c
                if updated:
                    row[j] = updated
                else:
                    row.pop(j, None)
            self.rhs[i] -= f * self.rhs[r]
        f = self.costs.get(column)
        if f:
            for j, c in pivot_row.items():
                updated = self.costs.get(j, Fraction(0)) - f * c
                if updated:
                    self.costs[j] = updated
                else:
                    self.costs.pop(j, None)
            self.value += f * self.rhs[r]
        self.basis[r] = column
        self.pivots += 1

    def solve(self) -> Fraction:
        while True:
            column = self._entering()
            if column is None:
                return self.value
            self._pivot(self._leaving(column), column)

    def primal_weights(self, count: int) -> List[Fraction]:
        return [-self.costs.get(self.order + i, Fraction(0)) for i in range(count)]

    def dual_solution(self) -> List[Fraction]:
        y = [Fraction(0)] * self.order
        for r, var in enumerate(self.basis):
            if var < self.order:
                y[var] = self.rhs[r]
        return y


def _verify(
    g: Graph,
    sets: List[Tuple[int, ...]],
    weights: List[Fraction],
    y: List[Fraction],
    value: Fraction,
) -> None:
    if any(w < 0 for w in weights) or sum(weights) != value:
        raise InvariantViolation(
            "fractional cover weights do not sum to the optimum",
            details={"graph": g.describe(), "value": str(value)},
        )
    coverage = [Fraction(0)] * g.order
    for members, w in zip(sets, weights):
        for v in members:
            coverage[v] += w
    if any(c < 1 for c in coverage):
        raise InvariantViolation(
            "fractional cover leaves a vertex uncovered",
            details={"graph": g.describe()},
        )
    if sum(y) != value or any(sum(y[v] for v in members) > 1 for members in sets):
        raise InvariantViolation(
            "fractional clique does not certify the optimum",
            details={"graph": g.describe()},
        )


@with_monitoring(ComponentName.CHROMATICS)
def fractional_chromatic(g: Graph, caps: Optional[SizeCaps] = None) -> ChromaticResult:
    """Exact fractional chromatic number with optimal independent set weights."""
    require_loop_free(g, "the fractional chromatic number")
    check_order_cap(g, "fractional_order", caps)
    if g.order == 0:
        return ChromaticResult(parameter="fractional", value=Rational.of(0))

    sets = maximal_independent_sets(g)
    simplex = _DualSimplex(g.order, sets)
    value = simplex.solve()
    weights = simplex.primal_weights(len(sets))
    _verify(g, sets, weights, simplex.dual_solution(), value)
    logger.debug(
        "fractional chromatic of %s is %s (%s independent sets, %s pivots)",
        g.describe(),
        value,
        len(sets),
        simplex.pivots,
    )
    return ChromaticResult(
        parameter="fractional",
        value=Rational.of(value),
        weights=tuple(
            (members, Rational.of(w)) for members, w in zip(sets, weights) if w
        ),
    )


def independence_number(g: Graph) -> int:
    return max((len(s) for s in maximal_independent_sets(g)), default=0)
