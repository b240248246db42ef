"""Acceptance runs of every suite with its packaged defaults."""

import pytest

from helix_lab.core.models.report_models import CaseVerdict, SuiteVerdict
from helix_lab.harness.reporting import format_text

DEFAULT_SUITES = [
    "homb",
    "shomb",
    "chrom",
    "chrom-coloring",
    "ocy",
    "m2",
    "m2-consequences",
    "dist",
    "while-sh",
    "cirhel-partial",
    "circular",
    "families",
    "sanity",
    "oracle",
    "psi-power-bound",
    "conjectures",
]


@pytest.mark.integration
@pytest.mark.slow
class TestDefaultSuites:
    """Every suite passes with the default seed, trials and parameters."""

    @pytest.mark.parametrize("suite", DEFAULT_SUITES)
    def test_suite_passes(self, suite, default_reports):
        """Test the suite verdict and that it checked something."""
        report = default_reports(suite)
        assert report.verdict == SuiteVerdict.PASS, format_text(report)
        assert report.cases
        assert report.seed == 42

    def test_chromatic_numbers(self, default_reports):
        """Test chi(H(m,n,k)) = m-2n+2 on the default instances."""
        observed = {
            case.instance: case.observed for case in default_reports("chrom").cases
        }
        assert observed["H:5,1,2"] == "5"
        assert observed["H:6,2,2"] == "4"
        assert observed["H:4,1,3"] == "4"
        assert observed["SH:6,2,2"] == "4"

    def test_reduction_trace(self, default_reports):
        """Test the recorded removal in SG(7,2,2) and its witness."""
        cases = [
            case
            for case in default_reports("while-sh").cases
            if case.check.startswith("({1,3},{4,5,6,7}) removed")
        ]
        assert len(cases) == 1
        assert cases[0].instance == "SGk:7,2,2"
        assert cases[0].verdict == CaseVerdict.PASS

    def test_reduction_covers_small_parameters(self, default_reports):
        """Test the sweep includes the smallest Schrijver helical graphs."""
        instances = {case.instance for case in default_reports("while-sh").cases}
        assert {"SGk:3,1,2", "SGk:5,2,2", "SGk:7,3,1"} <= instances

    def test_circular_values(self, default_reports):
        """Test the exact circular chromatic numbers are reported as such."""
        report = default_reports("circular")
        assert all(case.observed.endswith(" exact") for case in report.cases)
        observed = {case.instance: case.observed for case in report.cases}
        assert observed["H:3,1,2"] == "9/4 exact"

    def test_coxeter_has_no_heptagon_colouring(self, default_reports):
        """Test the Coxeter graph has odd girth 7 and no map to C:7."""
        cases = {
            case.check: case
            for case in default_reports("m2-consequences").cases
            if case.instance == "Cox"
        }
        assert cases["odd girth"].observed == "7"
        assert cases["map Cox -> C:7"].observed == "False"
        assert cases["map Cox -> C:7"].verdict == CaseVerdict.PASS

    def test_conjectured_bounds(self, default_reports):
        """Test the fractional bound and the Kneser circular checks both ran."""
        cases = default_reports("conjectures").cases
        fractional = [case for case in cases if case.check == "chi_f <= 14/5"]
        assert {"P", "C:5", "Q:3"} <= {case.instance for case in fractional}
        assert {
            case.instance for case in cases if case.check.startswith("no K_(p,q)")
        } == {"KG:5,1", "KG:5,2", "KG:6,2", "KG:7,2"}
