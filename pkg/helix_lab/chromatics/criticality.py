"""Vertex-criticality probes."""

import logging
from typing import List, Optional

from ..core.models.chromatic_models import CriticalityReport
from ..core.models.config_models import SizeCaps
from ..core.models.graph_models import Graph
from ..graphs.reduction import dominated_vertices
from ..monitoring import ComponentName, with_monitoring
from .coloring import check_order_cap, chromatic_number, require_loop_free

logger = logging.getLogger(__name__)


@with_monitoring(ComponentName.CHROMATICS)
def vertex_critical(
    g: Graph, stop_at_first: bool = False, caps: Optional[SizeCaps] = None
) -> CriticalityReport:
    """Whether deleting any vertex lowers the chromatic number.

    A dominated vertex never does (it can take its dominator's colour), so
    dominated vertices are reported without a search. ``stop_at_first``
    returns as soon as one non-critical vertex is known.
    """
    require_loop_free(g, "vertex criticality")
    caps = check_order_cap(g, "chromatic_order", caps)
    chi = chromatic_number(g, caps).integer_value
    dominated = tuple(dominated_vertices(g))
    deletions: List[Optional[int]] = [None] * g.order
    witness = dominated[0] if dominated else None

    if witness is None or not stop_at_first:
        for v in range(g.order):
            if v in dominated:
                continue
            value = chromatic_number(g.delete_vertex(v), caps).integer_value
            deletions[v] = value
            if value == chi and witness is None:
                witness = v
                if stop_at_first:
                    break

    critical = witness is None
    logger.info(
        "%s is %svertex-critical (chi=%s, %s dominated)",
        g.describe(),
        "" if critical else "not ",
        chi,
        len(dominated),
    )
    return CriticalityReport(
        chromatic_number=chi,
        deletions=tuple(deletions),
        dominated=dominated,
        critical=critical,
        witness_vertex=witness,
    )
