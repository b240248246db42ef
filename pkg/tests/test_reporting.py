"""Tests for report rendering."""

import json

import pytest

from helix_lab.core.errors import InvalidParameterError, InvariantViolation
from helix_lab.core.models.report_models import CaseRecord, CaseVerdict, Report
from helix_lab.harness import reporting
from helix_lab.harness.reporting import (
    format_records,
    format_text,
    quote_value,
    render_report,
    report_to_json,
    write_report,
)


@pytest.fixture
def report() -> Report:
    return Report.build(
        "demo",
        [
            CaseRecord(
                instance="K:3",
                check="map to C:5",
                observed="x=1",
                verdict=CaseVerdict.FAIL,
                witness="K:3:0,1,2",
            ),
            CaseRecord(
                instance="C:5",
                check="value",
                expected="5/2",
                observed="5/2",
                verdict=CaseVerdict.PASS,
            ),
        ],
        parameters={"name": "a b", "k": [1, 2]},
        seed=7,
    )


@pytest.mark.unit
class TestQuoteValue:
    """Tests for record value quoting."""

    @pytest.mark.parametrize(
        "value, expected",
        [
            ("5/2", "5/2"),
            ("K:3:0,1,2", "K:3:0,1,2"),
            ("a b", '"a b"'),
            ("x=1", '"x=1"'),
            ('say "hi"', '"say \\"hi\\""'),
            ("", '""'),
            (None, "null"),
        ],
    )
    def test_quote(self, value, expected):
        """Test only values that would break a record are quoted."""
        assert quote_value(value) == expected


@pytest.mark.unit
class TestRecords:
    """Tests for the line-oriented rendering."""

    def test_exact_text(self, report):
        """Test the header line and one line per case in canonical order."""
        assert format_records(report).splitlines() == [
            "report suite=demo format_version=1.0.0 seed=7 verdict=fail "
            "param.k=1,2 param.name=a_b",
            "case instance=C:5 check=value expected=5/2 observed=5/2 "
            "verdict=pass witness=null",
            'case instance=K:3 check="map to C:5" expected="" observed="x=1" '
            "verdict=fail witness=K:3:0,1,2",
        ]

    def test_trailing_newline(self, report):
        """Test the rendering ends with a newline."""
        assert format_records(report).endswith("\n")


@pytest.mark.unit
class TestText:
    """Tests for the human-readable rendering."""

    def test_summary(self, report):
        """Test verdict counts, cases and failure witnesses."""
        assert format_text(report).splitlines() == [
            "suite demo: FAIL",
            "  seed 7; k=1,2, name=a_b",
            "  1 pass, 1 fail, 0 indeterminate, 0 recorded",
            "  [pass] C:5: value expected 5/2, observed 5/2",
            "  [fail] K:3: map to C:5 = x=1",
            "      witness: K:3:0,1,2",
        ]

    def test_no_parameters(self):
        """Test the seed line without parameters."""
        text = format_text(Report.build("empty", []))
        assert text.splitlines()[:2] == ["suite empty: PASS", "  seed 42"]


@pytest.mark.unit
class TestJson:
    """Tests for the canonical JSON rendering."""

    def test_document(self, report):
        """Test the JSON document mirrors the model."""
        text = report_to_json(report)
        data = json.loads(text)
        assert data["suite"] == "demo"
        assert data["verdict"] == "fail"
        assert data["seed"] == 7
        assert [case["instance"] for case in data["cases"]] == ["C:5", "K:3"]
        assert text.endswith("\n")
        assert Report.model_validate(data) == report

    def test_keys_are_sorted(self, report):
        """Test keys are emitted in sorted order."""
        data = json.loads(report_to_json(report))
        assert list(data) == sorted(data)

    def test_schema_violation(self, report, monkeypatch):
        """Test a document failing the schema raises an invariant violation."""
        monkeypatch.setattr(
            reporting, "REPORT_SCHEMA", {"type": "object", "required": ["missing"]}
        )
        with pytest.raises(InvariantViolation) as exc_info:
            report_to_json(report)
        assert exc_info.value.details["errors"]


@pytest.mark.unit
class TestRender:
    """Tests for format dispatch and file output."""

    def test_dispatch(self, report):
        """Test each format name selects its formatter."""
        assert render_report(report, "text") == format_text(report)
        assert render_report(report, "records") == format_records(report)
        assert render_report(report, "json") == report_to_json(report)

    def test_unknown_format(self, report):
        """Test unknown format names are rejected."""
        with pytest.raises(InvalidParameterError, match="unknown report format"):
            render_report(report, "yaml")

    def test_write_report(self, report, tmp_path):
        """Test reports are written with LF line endings."""
        path = tmp_path / "report.txt"
        write_report(report, path, "records")
        assert path.read_text(encoding="utf-8") == format_records(report)
        assert b"\r" not in path.read_bytes()
