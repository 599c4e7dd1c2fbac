"""
Unit tests for claim dispatch, sweeps and report rendering.
"""

import json

import pytest

from src.algebra.catalog import cyclic_group, p3, trivial_group
from src.core.exceptions import ConfigurationError, NotABinaryPartialGroupError, UnknownClaimError
from src.core.reports import FunctorReport, ValidationReport, Verdict
from src.simplicial.functors import big_embed
from src.verification import ClaimId, claim_menu, parse_claim, report_render, run_claim, sweep_claim
from src.verification.claims import check_dagger_lemma, check_mirror_words


class TestClaims:
    """Test the claim menu"""

    def test_menu(self):
        """Test every claim id is listed once"""
        menu = claim_menu()
        assert len(menu) == len(set(menu)) == 15
        assert "main-theorem" in menu

    def test_parse_claim(self):
        """Test ids and unknown ids"""
        assert parse_claim("tb-id") is ClaimId.TB_ID
        with pytest.raises(UnknownClaimError):
            parse_claim("def-1")

    def test_dagger_lemma(self, P3):
        """Test the anti-automorphism and I2 checks"""
        report = check_dagger_lemma(P3)
        assert [c.claim for c in report.checks] == ["anti-auto.anti-automorphism", "anti-auto.I2"]
        assert report.passed

    def test_mirror_words(self, P3):
        """Test every word through length 3"""
        report = check_mirror_words(P3, max_length=3)
        assert report.passed
        assert report.checks[2].detail == "27 words × 2 trees"

    @pytest.mark.parametrize(
        "claim",
        [
            "anti-auto",
            "inversion-closure",
            "main-theorem",
            "tb-id",
            "eta",
            "triangles",
            "fully-faithful",
            "two-skeletal",
            "baer",
            "final-remark",
            "bp-partial-group",
            "skeleta",
            "simplicial-remark",
            "t-skeleton",
        ],
    )
    def test_claims_pass_on_p3(self, claim, P3):
        """Test each claim on P3 at N=4"""
        report = run_claim(claim, P3.magma, levels=4)
        assert report.verdict == Verdict.PASS, report.checks

    def test_mirror_claim(self, P3):
        """Test the default word length"""
        assert run_claim("mirror", P3).passed

    def test_claim_on_symset_subject(self, P3):
        """Test claims accept a truncated partial group"""
        X = big_embed(P3, 3)
        assert run_claim("eta", X).passed
        assert run_claim("tb-id", X, levels=3).passed

    def test_fully_faithful_pair(self, P3, z2):
        """Test a second subject"""
        report = run_claim("fully-faithful", P3, z2, levels=3)
        assert report.instances == ["P3", "Z/2"]

    def test_claim_needs_dagger(self, aa_undefined):
        """Test claims needing a binary partial group"""
        with pytest.raises(NotABinaryPartialGroupError):
            run_claim("tb-id", aa_undefined, levels=3)

    def test_baer_is_vacuous_without_inverses(self, aa_idempotent):
        """Test the criterion on a table outside its hypothesis"""
        report = run_claim("baer", aa_idempotent)
        assert report.checks[0].verdict == Verdict.VACUOUS
        assert report.passed


class TestSweepClaim:
    """Test claims over many structures"""

    def test_sweep(self):
        """Test check names carry the instance"""
        structures = [trivial_group(), cyclic_group(2), p3()]
        report = sweep_claim("tb-id", structures, levels=3)
        assert report.passed
        assert report.instances == ["trivial", "Z/2", "P3"]
        assert report.checks[0].claim == "trivial: tb-id.table"
        assert report.notes == ["3 instances, 6 checks, 0 failed"]

    def test_fully_faithful_sweeps_pairs(self):
        """Test ordered pairs"""
        structures = [trivial_group(), cyclic_group(2)]
        report = sweep_claim("fully-faithful", structures, levels=3)
        assert len(report.instances) == 4
        assert "trivial → Z/2" in report.instances

    def test_sweep_with_pool(self):
        """Test the pool returns reports in order"""
        structures = [trivial_group(), cyclic_group(2), p3()]
        report = sweep_claim("inversion-closure", structures, levels=3, workers=2)
        assert report.instances == ["trivial", "Z/2", "P3"]


class TestRender:
    """Test text and JSON rendering"""

    def test_validation_text(self):
        """Test the verdict line and violations"""
        report = ValidationReport(subject="demo")
        report.add("A3", ["a", "b", "c"], "x", "y")
        text = report_render(report).decode("utf-8")
        assert text.splitlines()[0] == "FAIL (1 violation)"
        assert "subject: demo" in text
        assert "  - A3: (a, b, c) expected x, found y" in text

    def test_passing_validation_text(self):
        """Test the plural form"""
        text = report_render(ValidationReport(subject="demo")).decode("utf-8")
        assert text.startswith("PASS (0 violations)")

    def test_functor_text(self, P3):
        """Test the check table"""
        text = report_render(run_claim("tb-id", P3, levels=3)).decode("utf-8")
        assert text.startswith("PASS tb-id (2 checks, 0 failed)")
        assert "tb-id.dagger" in text

    def test_json_is_sorted_and_stable(self, P3):
        """Test byte-identical output and the computed verdict"""
        report = run_claim("tb-id", P3, levels=3)
        first = report_render(report, "json")
        assert first == report_render(report, "json")
        data = json.loads(first)
        assert data["verdict"] == "pass"
        assert list(data) == sorted(data)

    def test_plain_mapping(self):
        """Test dictionaries render as JSON in either format"""
        assert json.loads(report_render({"b": 1, "a": 2})) == {"a": 2, "b": 1}

    def test_unknown_format(self):
        """Test formats outside text and json"""
        with pytest.raises(ConfigurationError):
            report_render(FunctorReport(construction="x"), "yaml")
