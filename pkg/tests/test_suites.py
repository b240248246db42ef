"""Tests for the verification suites and their helpers."""

import pytest
from pydantic import ValidationError

from helix_lab.core.constants.family_kinds import FamilyKind
from helix_lab.core.errors import (
    CapExceededError,
    CertificateError,
    InvalidParameterError,
    InvariantViolation,
)
from helix_lab.core.models.config_models import SizeCaps
from helix_lab.core.models.hom_models import VertexMap
from helix_lab.core.models.report_models import CaseVerdict, SuiteVerdict
from helix_lab.graphs import complete, count_helical_vertices, cycle
from helix_lab.harness.suites import (
    SUITES,
    SuiteContext,
    _fractional_subcubic_case,
    check_case,
    corpus,
    guarded,
    verify,
    while_sweep,
    witness_text,
)


@pytest.mark.unit
class TestCaseHelpers:
    """Tests for case construction helpers."""

    def test_check_case(self):
        """Test cases pass iff both sides print alike."""
        assert check_case("K:3", "value", 3, "3").verdict == CaseVerdict.PASS
        failed = check_case("K:3", "value", 3, 4, witness="w")
        assert failed.verdict == CaseVerdict.FAIL
        assert failed.expected == "3"
        assert failed.observed == "4"
        assert failed.witness == "w"

    @pytest.mark.parametrize(
        "error, verdict",
        [
            (CapExceededError("family_order", 8, 10), CaseVerdict.INDETERMINATE),
            (InvariantViolation("broken"), CaseVerdict.FAIL),
            (CertificateError("bad map"), CaseVerdict.FAIL),
        ],
    )
    def test_guarded(self, error, verdict):
        """Test errors become indeterminate or failed cases."""

        def body():
            raise error

        case = guarded("K:3", "check", body)
        assert case.verdict == verdict
        assert case.observed == error.message
        assert case.instance == "K:3"

    def test_guarded_passes_through(self):
        """Test a successful body is returned unchanged."""
        case = guarded("K:3", "value", check_case, "K:3", "value", 1, 1)
        assert case.verdict == CaseVerdict.PASS

    def test_guarded_propagates_other_errors(self):
        """Test unexpected errors are not swallowed."""

        def body():
            raise InvalidParameterError("bad input")

        with pytest.raises(InvalidParameterError):
            guarded("K:3", "check", body)

    def test_witness_text(self, triangle):
        """Test compact witness rendering."""
        f = VertexMap(source=triangle, target=triangle, assignment=(0, 1, 2))
        assert witness_text(f) == "K:3:0,1,2"


@pytest.mark.unit
class TestSuiteRegistry:
    """Tests for suite registration and dispatch."""

    def test_registered_suites(self):
        """Test every suite is registered."""
        assert set(SUITES) == {
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
            "psi-power-bound",
            "oracle",
            "conjectures",
        }

    def test_unknown_suite(self):
        """Test unknown suite names are rejected."""
        with pytest.raises(InvalidParameterError, match="unknown suite"):
            verify("nope")

    def test_context_validation(self, caps):
        """Test SuiteContext rejects negative trial counts."""
        with pytest.raises(ValidationError):
            SuiteContext(seed=1, trials=-1, caps=caps)

    def test_corpus_uses_context(self, caps):
        """Test the suite corpus follows seed, trials and floor."""
        ctx = SuiteContext(seed=5, trials=4, caps=caps)
        graphs = corpus(ctx, 5, 7)
        assert len(graphs) == 4
        assert all(g.name.startswith("gnp-odd-girth/s5/og5/n1-7/") for g in graphs)
        assert graphs == corpus(ctx, 5, 7)


@pytest.mark.unit
class TestSmallSuites:
    """Tests for suites that run quickly on reduced parameters."""

    def test_dist(self):
        """Test the Schrijver distance bound on SG(7,3)."""
        report = verify("dist", {"pairs": [[7, 3]], "max_s": 2}, trials=0)
        assert report.verdict == SuiteVerdict.PASS
        assert len(report.cases) == 2
        assert report.parameters["trials"] == 0
        assert report.parameters["pairs"] == [[7, 3]]

    def test_families(self):
        """Test the classical identifications."""
        report = verify("families")
        assert report.passed
        checks = {(case.instance, case.check) for case in report.cases}
        assert ("H:3,1,2", "isomorphic to C:9") in checks
        assert ("H:5,1,2", "vertex count") in checks

    def test_chrom(self):
        """Test chromatic numbers of two small families."""
        report = verify("chrom", {"instances": ["KG:5,2", "SG:7,3", "H:4,1,2"]})
        assert report.passed
        observed = {case.instance: case.observed for case in report.cases}
        assert observed == {"KG:5,2": "3", "SG:7,3": "3", "H:4,1,2": "4"}

    def test_chrom_coloring_trivial(self):
        """Test the explicit colouring with k = 1."""
        report = verify("chrom-coloring", {"m": 3, "n": 1, "k": 1})
        assert report.passed
        assert len(report.cases) == 2
        assert all(case.instance == "SG:3,1" for case in report.cases)

    def test_circular(self):
        """Test circular chromatic numbers of short odd cycles."""
        report = verify("circular", {"max_r": 2})
        assert report.passed
        observed = {case.instance: case.observed for case in report.cases}
        assert observed["C:5"] == "5/2 exact"
        assert observed["H:3,1,2"] == "9/4 exact"

    def test_cap_makes_suite_indeterminate(self):
        """Test a tight chromatic cap leaves cases indeterminate."""
        report = verify(
            "chrom", {"instances": ["KG:5,2"]}, caps=SizeCaps(chromatic_order=5)
        )
        assert report.verdict == SuiteVerdict.INDETERMINATE
        assert report.cases[0].verdict == CaseVerdict.INDETERMINATE

    def test_seed_is_reported(self):
        """Test an explicit seed reaches the report."""
        report = verify("dist", {"pairs": [[7, 3]], "max_s": 1}, seed=5)
        assert report.seed == 5

    def test_conjectures(self):
        """Test the subcubic fractional bound and one Kneser circular check."""
        report = verify(
            "conjectures", {"max_order": 8, "kneser": [[5, 2]], "qcap": 2}, trials=3
        )
        assert report.passed
        fractional = {
            case.instance: case.observed
            for case in report.cases
            if case.check == "chi_f <= 14/5"
        }
        assert len(fractional) == 8
        assert fractional["C:5"] == "5/2"
        assert fractional["P"] == "5/2"
        assert fractional["Kmn:3,3"] == "2"
        kneser_cases = [case for case in report.cases if case.instance == "KG:5,2"]
        assert len(kneser_cases) == 1
        assert kneser_cases[0].expected.startswith("upper 3, ")

    @pytest.mark.parametrize("g", [cycle(3), complete(5)])
    def test_fractional_bound_needs_triangle_free_subcubic(self, g, caps):
        """Test graphs outside the class are rejected, not measured."""
        ctx = SuiteContext(seed=1, trials=0, caps=caps)
        with pytest.raises(InvariantViolation, match="triangle-free subcubic"):
            _fractional_subcubic_case(g, ctx)


@pytest.mark.unit
class TestWhileSweep:
    """Tests for the reduction sweep parameters."""

    def test_sizes_respect_the_bound(self):
        """Test every swept SG(m,n,k) stays under the order bound."""
        sweep = while_sweep(20, 5, 2)
        assert (3, 1, 2) in sweep
        assert (5, 2, 1) in sweep
        for m, n, k in sweep:
            assert (
                count_helical_vertices(m, n, k, FamilyKind.SCHRIJVER_HELICAL) <= 20
            )

    def test_large_families_are_skipped(self):
        """Test SG(5,1,2) with 75 vertices is skipped under a bound of 20."""
        assert (5, 1, 2) not in while_sweep(20, 5, 2)
        assert (5, 1, 2) in while_sweep(75, 5, 2)
