"""
Report rendering.

Three renderings of a :class:`Report`:

- ``text``: a human-readable summary.
- ``records``: one ``report`` line followed by one ``case`` line per case,
  each a sequence of ``key=value`` pairs. Values containing whitespace,
  quotes or ``=`` are JSON-quoted.
- ``json``: the canonical model dump, validated against ``REPORT_SCHEMA``.

None of them carries timings, so equal seeds give byte-identical output.
"""

import json
import logging
from enum import Enum
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple, Union

from ..core.errors import InvalidParameterError, InvariantViolation
from ..core.models.report_models import CaseRecord, CaseVerdict, Report
from ..schemas import REPORT_SCHEMA
from ..utils.schema_utils import validate_schema
from ..utils.serialization import format_value, model_to_dict, model_to_json

logger = logging.getLogger(__name__)


class ReportFormat(str, Enum):
    TEXT = "text"
    RECORDS = "records"
    JSON = "json"


def quote_value(value: Optional[str]) -> str:
    if value is None:
        return "null"
    if not value or any(ch.isspace() or ch in '"=' for ch in value):
        return json.dumps(value, ensure_ascii=False)
    return value


def _pairs(items: List[Tuple[str, str]]) -> str:
    return " ".join(f"{key}={value}" for key, value in items)


def _case_line(case: CaseRecord) -> str:
    return "case " + _pairs(
        [
            ("instance", quote_value(case.instance)),
            ("check", quote_value(case.check)),
            ("expected", quote_value(case.expected)),
            ("observed", quote_value(case.observed)),
            ("verdict", case.verdict.value),
            ("witness", quote_value(case.witness)),
        ]
    )


def format_records(report: Report) -> str:
    """Line-oriented rendering, one record per line."""
    header = [
        ("suite", quote_value(report.suite)),
        ("format_version", report.format_version),
        ("seed", str(report.seed)),
        ("verdict", report.verdict.value),
    ]
    header.extend(
        (f"param.{key}", quote_value(format_value(value)))
        for key, value in report.parameters.items()
    )
    lines = ["report " + _pairs(header)]
    lines.extend(_case_line(case) for case in report.cases)
    return "\n".join(lines) + "\n"


def format_text(report: Report) -> str:
    """Human-readable summary: counts per verdict, then every case."""
    counts: Dict[CaseVerdict, int] = {verdict: 0 for verdict in CaseVerdict}
    for case in report.cases:
        counts[case.verdict] += 1
    params = ", ".join(
        f"{key}={format_value(value)}" for key, value in report.parameters.items()
    )
    lines = [
        f"suite {report.suite}: {report.verdict.value.upper()}",
        f"  seed {report.seed}" + (f"; {params}" if params else ""),
        "  "
        + ", ".join(f"{counts[verdict]} {verdict.value}" for verdict in CaseVerdict),
    ]
    for case in report.cases:
        line = f"  [{case.verdict.value}] {case.instance}: {case.check}"
        if case.expected:
            line += f" expected {case.expected}, observed {case.observed}"
        elif case.observed:
            line += f" = {case.observed}"
        lines.append(line)
        if case.witness and case.verdict == CaseVerdict.FAIL:
            lines.append(f"      witness: {case.witness}")
    return "\n".join(lines) + "\n"


def report_to_json(report: Report) -> str:
    """Canonical JSON document.

    Raises:
        InvariantViolation: if the dump does not satisfy ``REPORT_SCHEMA``.
    """
    errors = validate_schema(model_to_dict(report), REPORT_SCHEMA)
    if errors:
        raise InvariantViolation(
            "report document does not match its schema",
            details={"errors": errors},
        )
    return model_to_json(report)


FORMATTERS: Dict[ReportFormat, Callable[[Report], str]] = {
    ReportFormat.TEXT: format_text,
    ReportFormat.RECORDS: format_records,
    ReportFormat.JSON: report_to_json,
}


def render_report(report: Report, fmt: Union[str, ReportFormat] = "text") -> str:
    try:
        formatter = FORMATTERS[ReportFormat(fmt)]
    except ValueError as exc:
        raise InvalidParameterError(
            f"unknown report format {fmt!r}; expected one of "
            + ", ".join(f.value for f in ReportFormat),
            "format",
        ) from exc
    return formatter(report)


def write_report(
    report: Report, path: Union[str, Path], fmt: Union[str, ReportFormat] = "text"
) -> None:
    Path(path).write_text(render_report(report, fmt), encoding="utf-8", newline="\n")
    logger.info("wrote %s report for %s to %s", fmt, report.suite, path)
