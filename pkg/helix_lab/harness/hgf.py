"""
HGF: the line-oriented text format for graphs.

    # comment
    graph <order> [loops]
    name <descriptor>
    v <index> <label>
    e <i> <j>

Edges are written with ``i <= j`` in lexicographic order. Structured labels
are written as ``({1,3},{4,5,6,7})``; any other whitespace-free token is a
text label. The ``name`` line is optional and carries the graph's family
descriptor or derived expression.
"""

import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Set, Tuple, Union

from ..core.errors import GraphFormatError, InvalidParameterError
from ..core.models.config_models import SizeCaps
from ..core.models.graph_models import Graph, VertexLabel
from ..graphs.descriptors import looks_like_descriptor
from ..graphs.families import build_family

logger = logging.getLogger(__name__)

_TUPLE_LABEL_RE = re.compile(r"^\((\{[0-9,]*\})(,\{[0-9,]*\})*\)$")
_PART_RE = re.compile(r"\{([0-9,]*)\}")


def format_label(label: VertexLabel) -> str:
    if isinstance(label, str):
        return label
    parts = ("{" + ",".join(str(x) for x in part) + "}" for part in label)
    return "(" + ",".join(parts) + ")"


def parse_label(token: str) -> VertexLabel:
    """Inverse of :func:`format_label`."""
    if not token.startswith("("):
        return token
    if not _TUPLE_LABEL_RE.match(token):
        raise ValueError(f"malformed set-tuple label {token!r}")
    parts = []
    for body in _PART_RE.findall(token):
        parts.append(tuple(int(x) for x in body.split(",")) if body else ())
    return tuple(parts)


def serialize_graph(g: Graph) -> str:
    """HGF text of ``g`` with LF line endings and a trailing newline."""
    lines = [f"graph {g.order} loops" if g.has_loops else f"graph {g.order}"]
    if g.name:
        lines.append(f"name {g.name}")
    if g.labels is not None:
        lines.extend(f"v {v} {format_label(label)}" for v, label in enumerate(g.labels))
    lines.extend(f"e {i} {j}" for i, j in g.edges())
    return "\n".join(lines) + "\n"


def _parse_int(token: str, what: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError as exc:
        raise GraphFormatError(
            f"{what} must be an integer, got {token!r}", line_number
        ) from exc


def _parse_header(fields: List[str], line_number: int) -> Tuple[int, bool]:
    if fields[0] != "graph" or len(fields) not in (2, 3):
        raise GraphFormatError("expected header 'graph <order> [loops]'", line_number)
    if len(fields) == 3 and fields[2] != "loops":
        raise GraphFormatError(f"unknown header flag {fields[2]!r}", line_number)
    order = _parse_int(fields[1], "order", line_number)
    if order < 0:
        raise GraphFormatError("order must be non-negative", line_number)
    return order, len(fields) == 3


def parse_graph(text: str) -> Graph:
    """Parse an HGF document.

    Raises:
        GraphFormatError: with the offending line number.
    """
    header: Optional[Tuple[int, bool]] = None
    name: Optional[str] = None
    labels: Dict[int, VertexLabel] = {}
    edges: List[Tuple[int, int]] = []
    seen: Set[Tuple[int, int]] = set()

    for line_number, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            header = _parse_header(fields, line_number)
            continue
        order, loops = header
        kind = fields[0]
        if kind == "name":
            if len(fields) != 2 or name is not None:
                raise GraphFormatError(
                    "expected a single 'name <descriptor>'", line_number
                )
            name = fields[1]
        elif kind == "v":
            if len(fields) != 3:
                raise GraphFormatError("expected 'v <index> <label>'", line_number)
            v = _parse_int(fields[1], "vertex index", line_number)
            if not 0 <= v < order:
                raise GraphFormatError(
                    f"vertex {v} outside 0..{order - 1}", line_number
                )
            if v in labels:
                raise GraphFormatError(f"vertex {v} labelled twice", line_number)
            try:
                labels[v] = parse_label(fields[2])
            except ValueError as exc:
                raise GraphFormatError(str(exc), line_number) from exc
        elif kind == "e":
            if len(fields) != 3:
                raise GraphFormatError("expected 'e <i> <j>'", line_number)
            i = _parse_int(fields[1], "edge endpoint", line_number)
            j = _parse_int(fields[2], "edge endpoint", line_number)
            if not (0 <= i < order and 0 <= j < order):
                raise GraphFormatError(
                    f"edge ({i}, {j}) outside 0..{order - 1}", line_number
                )
            if i == j and not loops:
                raise GraphFormatError(
                    f"loop at {i} but the header does not declare loops", line_number
                )
            key = (min(i, j), max(i, j))
            if key in seen:
                raise GraphFormatError(f"duplicate edge {key}", line_number)
            seen.add(key)
            edges.append(key)
        else:
            raise GraphFormatError(f"unknown record type {kind!r}", line_number)

    if header is None:
        raise GraphFormatError("missing 'graph <order>' header")
    order, _ = header
    if labels and len(labels) != order:
        missing = min(set(range(order)) - set(labels))
        raise GraphFormatError(f"vertex {missing} has no label but other vertices do")
    try:
        return Graph.from_edges(
            order,
            edges,
            labels=[labels[v] for v in range(order)] if labels else None,
            name=name,
        )
    except ValueError as exc:
        raise GraphFormatError(f"invalid graph: {exc}") from exc


def read_graph(path: Union[str, Path]) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(g: Graph, path: Union[str, Path]) -> None:
    Path(path).write_text(serialize_graph(g), encoding="utf-8", newline="\n")


def load_graph(source: str, caps: Optional[SizeCaps] = None) -> Graph:
    """Graph from an HGF path or, failing that, a family descriptor."""
    path = Path(source)
    if path.is_file():
        logger.debug("reading graph from %s", path)
        return read_graph(path)
    if looks_like_descriptor(source):
        return build_family(source, caps)
    raise InvalidParameterError(
        f"{source!r} is neither an HGF file nor a family descriptor", "graph"
    )
