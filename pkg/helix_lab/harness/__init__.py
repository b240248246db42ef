"""Graph files, corpora, verification suites, probes, reports and the CLI."""

from .corpus import corpus_name, generate_corpus, meets_floor
from .hgf import (
    format_label,
    load_graph,
    parse_graph,
    parse_label,
    read_graph,
    serialize_graph,
    write_graph,
)
from .oracles import brute_force_chromatic, brute_force_hom_count
from .probes import parameter_probe, pentagon_probe, subdivision_power_scan
from .reporting import (
    ReportFormat,
    format_records,
    format_text,
    render_report,
    report_to_json,
    write_report,
)
from .suites import SUITES, SuiteContext, register_suite, verify

__all__ = [
    # Graph files
    "format_label",
    "load_graph",
    "parse_graph",
    "parse_label",
    "read_graph",
    "serialize_graph",
    "write_graph",
    # Corpora
    "corpus_name",
    "generate_corpus",
    "meets_floor",
    # Oracles
    "brute_force_chromatic",
    "brute_force_hom_count",
    # Suites and probes
    "SUITES",
    "SuiteContext",
    "parameter_probe",
    "pentagon_probe",
    "register_suite",
    "subdivision_power_scan",
    "verify",
    # Reports
    "ReportFormat",
    "format_records",
    "format_text",
    "render_report",
    "report_to_json",
    "write_report",
]
