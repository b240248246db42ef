"""Tests for the open-question probes."""

import logging

import pytest

from helix_lab.core.models.report_models import CaseVerdict, SuiteVerdict
from helix_lab.harness.probes import (
    parameter_probe,
    pentagon_probe,
    subdivision_power_scan,
)


def _observed(report):
    return {case.check: case.observed for case in report.cases}


@pytest.mark.unit
class TestPentagonProbe:
    """Tests for the pentagon probe."""

    def test_cube(self, cube):
        """Test the bipartite cube maps to C5 and the cross-check agrees."""
        report = pentagon_probe(cube)
        assert report.suite == "probe-pentagon"
        assert report.verdict == SuiteVerdict.PASS
        observed = _observed(report)
        assert observed["girth"] == "4"
        assert observed["odd girth"] == "infinite"
        assert observed["map to C:5"] == "True"
        assert observed["S2(g)^(5) 3-colourable"] == "True"
        assert observed["chromatic number of g^(3)"] == "2"
        assert observed["map to C:5 iff S2(g)^(5) 3-colourable"] == "agree"

    def test_only_agreement_is_judged(self, cube):
        """Test every case except the cross-check is recorded."""
        report = pentagon_probe(cube)
        judged = [c for c in report.cases if c.verdict != CaseVerdict.RECORDED]
        assert [c.check for c in judged] == [
            "map to C:5 iff S2(g)^(5) 3-colourable"
        ]

    def test_warns_on_non_cubic(self, pentagon, caplog):
        """Test a warning is logged for graphs that are not cubic."""
        with caplog.at_level(logging.WARNING, logger="helix_lab.harness.probes"):
            report = pentagon_probe(pentagon)
        assert "not cubic" in caplog.text
        assert report.passed


@pytest.mark.unit
class TestSubdivisionPowerScan:
    """Tests for the subdivision power scan."""

    def test_triangle(self, triangle):
        """Test S2(K3)^(3) = C9^(3) keeps three colours."""
        report = subdivision_power_scan(triangle, [1], [1])
        assert report.suite == "scan"
        observed = _observed(report)
        assert observed["chromatic number"] == "3"
        assert observed["k=1 t=1"] == "chi=3, ratio 1, equals chi(g)"
        assert report.parameters["k"] == [1]
        assert report.parameters["t"] == [1]

    def test_ratio(self, pentagon):
        """Test the ratio (2k+1)/(2t+1) is reported."""
        report = subdivision_power_scan(pentagon, [2], [1])
        assert "ratio 5/3" in _observed(report)["k=2 t=1"]

    def test_grid_is_deduplicated(self, triangle):
        """Test repeated grid values are scanned once."""
        report = subdivision_power_scan(triangle, [1, 1], [1])
        assert len(report.cases) == 2

    def test_cap_leaves_cell_indeterminate(self, triangle, tiny_caps):
        """Test an oversized power becomes an indeterminate cell."""
        report = subdivision_power_scan(triangle, [1], [1], tiny_caps)
        cells = {c.check: c.verdict for c in report.cases}
        assert cells["k=1 t=1"] == CaseVerdict.INDETERMINATE


@pytest.mark.unit
class TestParameterProbe:
    """Tests for the parameter probe."""

    def test_nonagon(self, nonagon):
        """Test the four parameters of C9 are ordered."""
        report = parameter_probe(nonagon)
        assert report.suite == "probe-parameters"
        assert report.passed
        observed = report.cases[0].observed
        assert "chi=3" in observed
        assert "chi_c=9/4" in observed
        assert "chi_f=9/4" in observed
        assert "psi=3" in observed

    def test_cap(self, pentagon, tiny_caps):
        """Test a tight cap gives an indeterminate probe."""
        report = parameter_probe(pentagon, tiny_caps)
        assert report.verdict == SuiteVerdict.INDETERMINATE
