"""
Command line interface ``hx``.

Every ``<graph>`` argument is an HGF file path or a family descriptor such
as ``H:5,1,2``. Exit statuses: 0 pass, 1 fail, 2 usage or parse error,
3 size cap exceeded.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from .. import __version__
from ..chromatics import (
    chromatic_number,
    circular_chromatic,
    fractional_chromatic,
    local_chromatic,
    vertex_critical,
)
from ..core.constants.error_codes import (
    EXIT_CAP_EXCEEDED,
    EXIT_FAIL,
    EXIT_PASS,
    EXIT_USAGE,
)
from ..core.constants.family_kinds import FamilyKind
from ..core.errors import HelixError, InvalidParameterError
from ..core.models.chromatic_models import ChromaticResult
from ..core.models.config_models import SizeCaps
from ..core.models.graph_models import Graph
from ..core.models.hom_models import SearchMode, VertexMap
from ..core.models.report_models import Report, SuiteVerdict
from ..core.settings import load_caps, load_defaults
from ..graphs import (
    build_family,
    cycle_stats,
    helical_parameters,
    power,
    stable_helical,
    subdivide,
    while_reduce,
)
from ..hom import find_homomorphism
from ..monitoring import ComponentName, setup_from_env, track_performance
from .hgf import format_label, load_graph, serialize_graph
from .probes import parameter_probe, pentagon_probe, subdivision_power_scan
from .reporting import ReportFormat, render_report
from .suites import SUITES, verify

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, SizeCaps], int]


def parse_range(text: str) -> List[int]:
    """``"a..b"`` or ``"a"`` as an inclusive list of integers."""
    low, sep, high = text.partition("..")
    try:
        start = int(low)
        stop = int(high) if sep else start
    except ValueError as exc:
        raise InvalidParameterError(
            f"expected an integer or a range a..b, got {text!r}", "range"
        ) from exc
    if stop < start:
        raise InvalidParameterError(f"empty range {text!r}", "range")
    return list(range(start, stop + 1))


def parse_parameters(
    items: Sequence[str], defaults: Dict[str, Any]
) -> Dict[str, Any]:
    """Suite overrides from ``key=value`` items.

    Values are read as JSON when possible and as plain strings otherwise. A
    scalar given for a list-valued default is wrapped, so ``k=2`` means
    ``k=[2]`` and ``pairs=4,1`` means ``pairs=[[4,1]]``.
    """
    overrides: Dict[str, Any] = {}
    for item in items:
        key, sep, raw = item.partition("=")
        if not sep or not key:
            raise InvalidParameterError(
                f"suite parameters are key=value pairs, got {item!r}", "parameters"
            )
        try:
            value: Any = json.loads(raw)
        except json.JSONDecodeError:
            value = raw
        default = defaults.get(key)
        if isinstance(default, list) and not isinstance(value, list):
            if default and isinstance(default[0], list) and isinstance(value, str):
                value = [json.loads(f"[{raw}]")]
            else:
                value = [value]
        overrides[key] = value
    return overrides


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _emit_graph(g: Graph, args: argparse.Namespace) -> int:
    _emit(serialize_graph(g), args.output)
    return EXIT_PASS


def _emit_report(report: Report, args: argparse.Namespace) -> int:
    _emit(render_report(report, args.format), args.output)
    if report.verdict == SuiteVerdict.FAIL:
        return EXIT_FAIL
    if report.verdict == SuiteVerdict.INDETERMINATE:
        return EXIT_CAP_EXCEEDED
    return EXIT_PASS


def _vertex_text(g: Graph, v: int) -> str:
    label = g.label(v)
    return format_label(label) if label is not None else str(v)


def _map_lines(f: VertexMap) -> List[str]:
    return [
        f"  {_vertex_text(f.source, v)} -> {_vertex_text(f.target, image)}"
        for v, image in enumerate(f.assignment)
    ]


def _print_result(result: ChromaticResult, certificate: bool) -> None:
    print(f"{result.parameter}: {result.summary()}")
    for refutation in result.refuted:
        print(f"  refuted {refutation}")
    if certificate and result.certificate is not None:
        print(f"certificate into {result.certificate.target.describe()}:")
        print("\n".join(_map_lines(result.certificate)))


# Commands


def cmd_family(args: argparse.Namespace, caps: SizeCaps) -> int:
    return _emit_graph(build_family(args.descriptor, caps), args)


def cmd_power(args: argparse.Namespace, caps: SizeCaps) -> int:
    return _emit_graph(power(load_graph(args.graph, caps), args.k), args)


def cmd_subdivide(args: argparse.Namespace, caps: SizeCaps) -> int:
    return _emit_graph(subdivide(load_graph(args.graph, caps), args.t), args)


def cmd_odd_girth(args: argparse.Namespace, caps: SizeCaps) -> int:
    stats = cycle_stats(load_graph(args.graph, caps))
    print(f"girth: {stats.girth or 'infinite'}")
    print(f"odd girth: {stats.odd_girth or 'infinite'}")
    return EXIT_PASS


def cmd_hom(args: argparse.Namespace, caps: SizeCaps) -> int:
    g = load_graph(args.source, caps)
    h = load_graph(args.target, caps)
    if args.count is not None:
        result = find_homomorphism(g, h, SearchMode.COUNT, limit=args.count, caps=caps)
        suffix = " (limit reached)" if result.saturated else ""
        print(f"homomorphisms {g.describe()} -> {h.describe()}: {result.count}{suffix}")
        return EXIT_PASS
    mode = SearchMode.FIRST if args.witness else SearchMode.DECIDE
    result = find_homomorphism(g, h, mode, caps=caps)
    print(f"hom {g.describe()} -> {h.describe()}: {'yes' if result.exists else 'no'}")
    if result.witness is not None:
        print("\n".join(_map_lines(result.witness)))
    return EXIT_PASS


def cmd_chromatic(args: argparse.Namespace, caps: SizeCaps) -> int:
    result = chromatic_number(load_graph(args.graph, caps), caps)
    _print_result(result, args.certificate)
    return EXIT_PASS


def cmd_circular(args: argparse.Namespace, caps: SizeCaps) -> int:
    g = load_graph(args.graph, caps)
    result = circular_chromatic(g, args.qcap, caps)
    _print_result(result, args.certificate)
    return EXIT_PASS


def cmd_fractional(args: argparse.Namespace, caps: SizeCaps) -> int:
    result = fractional_chromatic(load_graph(args.graph, caps), caps)
    _print_result(result, certificate=False)
    for members, weight in result.weights:
        print(f"  weight {weight} on {{{','.join(str(v) for v in members)}}}")
    return EXIT_PASS


def cmd_local(args: argparse.Namespace, caps: SizeCaps) -> int:
    result = local_chromatic(load_graph(args.graph, caps), caps)
    _print_result(result, args.certificate)
    return EXIT_PASS


def cmd_critical(args: argparse.Namespace, caps: SizeCaps) -> int:
    report = vertex_critical(load_graph(args.graph, caps), args.first, caps)
    print(f"chromatic number: {report.chromatic_number}")
    print(f"vertex-critical: {'yes' if report.critical else 'no'}")
    if report.dominated:
        print(f"dominated: {' '.join(str(v) for v in report.dominated)}")
    for v, value in enumerate(report.deletions):
        if value is not None:
            print(f"  chi(g - {v}) = {value}")
    return EXIT_PASS


def cmd_reduce_sh(args: argparse.Namespace, caps: SizeCaps) -> int:
    g = build_family(args.descriptor, caps)
    kind, m, n, k = helical_parameters(g)
    if kind != FamilyKind.SCHRIJVER_HELICAL:
        raise InvalidParameterError(
            f"reduce-sh needs an SGk:m,n,k descriptor, got {args.descriptor!r}",
            "descriptor",
        )
    reduced, trace = while_reduce(g)
    for u, v in trace.removed:
        print(f"remove {_vertex_text(g, u)} by {_vertex_text(g, v)}")
    target = stable_helical(m, n, k, caps)
    matches = set(reduced.labels or ()) == set(target.labels or ())
    print(f"survivors: {reduced.order} of {g.order}")
    print(f"equals {target.name}: {'yes' if matches else 'no'}")
    if args.output:
        _emit(serialize_graph(reduced), args.output)
    return EXIT_PASS if matches else EXIT_FAIL


def cmd_verify(args: argparse.Namespace, caps: SizeCaps) -> int:
    if args.suite not in SUITES:
        raise InvalidParameterError(
            f"unknown suite {args.suite!r} (known: {', '.join(sorted(SUITES))})",
            "suite",
        )
    defaults = load_defaults().parameters_for(args.suite)
    overrides = parse_parameters(args.parameters, defaults)
    with track_performance(f"verify {args.suite}", ComponentName.CLI):
        report = verify(args.suite, overrides, args.seed, args.trials, caps)
    return _emit_report(report, args)


PROBES = {"pentagon": pentagon_probe, "parameters": parameter_probe}


def cmd_probe(args: argparse.Namespace, caps: SizeCaps) -> int:
    probe = PROBES[args.probe]
    return _emit_report(probe(load_graph(args.graph, caps), caps), args)


def cmd_scan(args: argparse.Namespace, caps: SizeCaps) -> int:
    g = load_graph(args.graph, caps)
    report = subdivision_power_scan(g, parse_range(args.k), parse_range(args.t), caps)
    return _emit_report(report, args)


# Parser


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-o", "--output", help="Write to this file instead of stdout")


def _add_report_options(parser: argparse.ArgumentParser) -> None:
    _add_output(parser)
    parser.add_argument(
        "--format",
        choices=[f.value for f in ReportFormat],
        default=ReportFormat.TEXT.value,
        help="Report rendering",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hx", description="Helical graphs laboratory"
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="Log progress to stderr"
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def command(name: str, handler: Handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = command("family", cmd_family, "Build a family graph and print it as HGF")
    p.add_argument("descriptor")
    _add_output(p)

    p = command("power", cmd_power, "k-th walk power of a graph")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("graph")
    _add_output(p)

    p = command("subdivide", cmd_subdivide, "t-subdivision of a graph")
    p.add_argument("-t", type=int, required=True)
    p.add_argument("graph")
    _add_output(p)

    p = command("odd-girth", cmd_odd_girth, "Girth and odd girth")
    p.add_argument("graph")

    p = command("hom", cmd_hom, "Decide, construct or count homomorphisms")
    p.add_argument("source")
    p.add_argument("target")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--witness", action="store_true", help="Print one map")
    group.add_argument("--count", type=int, metavar="N", help="Count up to N maps")

    for name, handler, help_text in (
        ("chromatic", cmd_chromatic, "Exact chromatic number"),
        ("circular", cmd_circular, "Circular chromatic number"),
        ("local", cmd_local, "Local chromatic number"),
    ):
        p = command(name, handler, help_text)
        p.add_argument("graph")
        p.add_argument(
            "--certificate", action="store_true", help="Print the colouring"
        )
        if name == "circular":
            p.add_argument("--qcap", type=int, help="Largest denominator tried")

    p = command("fractional", cmd_fractional, "Exact fractional chromatic number")
    p.add_argument("graph")

    p = command("critical", cmd_critical, "Vertex-criticality check")
    p.add_argument("graph")
    p.add_argument("--first", action="store_true", help="Stop at the first witness")

    p = command("reduce-sh", cmd_reduce_sh, "Dominated-vertex reduction of SGk")
    p.add_argument("descriptor")
    _add_output(p)

    p = command("verify", cmd_verify, "Run a verification suite")
    p.add_argument("suite", help=f"One of: {', '.join(sorted(SUITES))}")
    p.add_argument("parameters", nargs="*", metavar="key=value")
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int)
    _add_report_options(p)

    p = command("probe", cmd_probe, "Data-gathering probes")
    p.add_argument("probe", choices=sorted(PROBES))
    p.add_argument("graph")
    _add_report_options(p)

    p = command("scan", cmd_scan, "chi of powers of subdivisions over a grid")
    p.add_argument("graph")
    p.add_argument("--k", required=True, help="a..b")
    p.add_argument("--t", required=True, help="c..d")
    _add_report_options(p)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_from_env()
    if args.verbose:
        logging.getLogger("helix_lab").setLevel(logging.INFO)
        for handler in logging.getLogger("helix_lab").handlers:
            handler.setLevel(logging.INFO)
    try:
        caps = load_caps()
        return int(args.handler(args, caps))
    except HelixError as e:
        print(f"hx: {e.message}", file=sys.stderr)
        logger.debug("command failed: %s", e.to_dict())
        return e.exit_status
    except OSError as e:
        print(f"hx: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
