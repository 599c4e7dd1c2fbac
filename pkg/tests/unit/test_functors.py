"""
Unit tests for B, B′, T, skeleta and the per-instance adjunction checks.
"""

import pytest

from src.algebra.magma import MagmaHom
from src.core.config import override_settings
from src.core.exceptions import (
    IntegrityError,
    NotABinaryPartialGroupError,
    PreconditionError,
    ResourceGuardError,
    StructuralError,
)
from src.core.reports import Verdict
from src.simplicial.functors import (
    big_embed,
    check_2skeletal_equivalence,
    check_bp_partial_group,
    check_final_remark,
    check_fully_faithful,
    check_inversion_closure,
    check_main_theorem,
    check_simplicial_two_skeleton,
    check_skeleta,
    check_t_skeleton_invariance,
    check_tb_identity,
    check_triangle_identities,
    check_unit_eta,
    group_nerve,
    induced_hom_B,
    is_two_skeletal,
    levels_differ,
    pullback_words,
    skeleton,
    small_embed,
    underlying_T,
)
from src.simplicial.symset import (
    TruncatedPartialGroup,
    edge_matrix,
    validate_partial_group,
    validate_symset_hom,
)

A, B = 1, 2


def claims(report):
    return {check.claim: check.verdict for check in report.checks}


class TestBigEmbed:
    """Test B(P)"""

    def test_levels_of_z2(self, z2):
        """Test every word over a group is a simplex"""
        X = big_embed(z2, 4)
        assert X.level_sizes() == [1, 2, 4, 8, 16]
        assert X.label == "B(Z/2)"

    def test_trivial_group(self, trivial):
        """Test one simplex per level"""
        assert big_embed(trivial, 3).level_sizes() == [1, 1, 1, 1]

    def test_exhaustive_matches_incremental(self, P3):
        """Test prefix growth loses nothing"""
        assert big_embed(P3, 4).levels == big_embed(P3, 4, exhaustive=True).levels

    def test_nerve_of_group(self, z3):
        """Test B of a group is its nerve"""
        assert big_embed(z3, 3).levels == group_nerve(z3, 3).levels

    def test_nerve_requires_group(self, P3):
        """Test a partial table is not a group"""
        with pytest.raises(PreconditionError):
            group_nerve(P3, 3)

    def test_magma_without_dagger(self, aa_undefined):
        """Test B needs a binary partial group"""
        with pytest.raises(NotABinaryPartialGroupError):
            big_embed(aa_undefined, 3)

    def test_truncation_bounds(self, P3):
        """Test N below 2 and above the safe bound"""
        with pytest.raises(StructuralError):
            big_embed(P3, 1)
        with pytest.raises(ResourceGuardError):
            big_embed(P3, 9)

    def test_unsafe_large_lifts_bound(self, trivial):
        """Test the override"""
        override_settings(verification={"unsafe_large": True})
        assert big_embed(trivial, 9).N == 9


class TestUnderlying:
    """Test T"""

    def test_tb_is_identity(self, P3, z3, v4):
        """Test T(B(P)) recovers the table and the dagger"""
        for G in (P3, z3, v4):
            report = check_tb_identity(G, 4)
            assert report.passed
        T = underlying_T(big_embed(P3, 3))
        assert T.table == P3.table
        assert T.label == "T(B(P3))"

    def test_skeleton_check(self, P3):
        """Test the optional 2-skeleton comparison"""
        T = underlying_T(big_embed(P3, 3), check_skeleton=True)
        assert T.dagger == P3.dagger

    def test_skeleton_check_is_opt_in(self, v4, monkeypatch):
        """Test the 2-skeleton is rebuilt only when asked, and agrees on B′(V4)"""
        calls = []
        real_skeleton = skeleton

        def counting_skeleton(X, k, **kwargs):
            calls.append(k)
            return real_skeleton(X, k, **kwargs)

        monkeypatch.setattr("src.simplicial.functors.skeleton", counting_skeleton)
        Y = small_embed(v4, 4)
        calls.clear()
        assert underlying_T(Y).table == v4.table
        assert calls == []
        assert underlying_T(Y, check_skeleton=True).table == v4.table
        assert calls == [2]

    def test_no_dagger(self, P3):
        """Test D_2 without (a, b) or (b, a) gives a magma without a dagger"""
        X = TruncatedPartialGroup.from_levels(P3, 2, {2: [(0, 0), (0, A), (0, B), (A, 0), (B, 0)]})
        with pytest.raises(IntegrityError):
            underlying_T(X)


class TestSkeleta:
    """Test sk_k and B′"""

    def test_pullbacks_of_an_edge(self, P3):
        """Test every length-2 walk on the vertices of (a)"""
        matrix = edge_matrix(big_embed(P3, 2), (A,))
        assert pullback_words(matrix, 2) == {(0, 0), (0, A), (A, 0), (A, B), (B, A), (B, 0), (0, B)}
        assert pullback_words(matrix, 2, monotone_only=True) == {(0, 0), (0, A), (A, 0)}

    def test_skeleton_is_subobject(self, P3):
        """Test sk_2 sits inside B and keeps low levels"""
        X = big_embed(P3, 4)
        S = skeleton(X, 2)
        assert S.label == "sk_2(B(P3))"
        assert all(S.levels[n] <= X.levels[n] for n in range(5))
        assert S.levels[:3] == X.levels[:3]

    def test_p3_is_two_skeletal(self, P3):
        """Test every word of B(P3) is a walk on an edge"""
        X = big_embed(P3, 4)
        assert is_two_skeletal(X)
        assert levels_differ(skeleton(X, 2), X) is None

    def test_klein_group_is_not_two_skeletal(self, v4):
        """Test (a, b, a) visits four vertices, more than a 2-simplex has"""
        X = big_embed(v4, 3)
        assert not is_two_skeletal(X)
        assert (1, 2, 1) not in skeleton(X, 2).level(3)

    def test_small_embed(self, P3):
        """Test B′ is 2-skeletal with the label it advertises"""
        Y = small_embed(P3, 4)
        assert Y.label == "B′(P3)"
        assert is_two_skeletal(Y)

    def test_small_embed_of_klein_group(self, v4):
        """Test B′(V4) is a valid partial group sitting properly inside B(V4) at level 3"""
        Y = small_embed(v4, 3)
        assert validate_partial_group(Y).passed
        assert Y.level(3) < big_embed(v4, 3).level(3)
        assert (A, B, A) not in Y.level(3)

    def test_degree_range(self, P3):
        """Test k outside 2..N"""
        with pytest.raises(PreconditionError):
            skeleton(big_embed(P3, 3), 4)

    def test_skeleta_claim(self, P3):
        """Test k = 2, 3 and 4 at N = 4, k = 5 skipped"""
        report = check_skeleta(P3, 4)
        assert report.passed
        assert {"skeleta.k2.subobject", "skeleta.k2.idempotent", "skeleta.k4.subobject"} <= set(claims(report))
        assert "k=5 skipped above N=4" in report.notes

    def test_t_skeleton_invariance(self, P3):
        """Test T ignores levels above 2"""
        assert check_t_skeleton_invariance(big_embed(P3, 4)).passed

    @pytest.mark.parametrize("name", ["trivial", "z2", "P3"])
    def test_monotone_two_skeleton(self, name, request):
        """Test closing under monotone maps only is valid exactly for the trivial group"""
        G = request.getfixturevalue(name)
        report = check_simplicial_two_skeleton(G, 4)
        assert report.passed
        assert report.checks[0].detail == ("valid partial group" if name == "trivial" else "not a partial group")


class TestAdjunction:
    """Test the unit, the triangle identities and full faithfulness"""

    def test_unit_on_b(self, P3):
        """Test η at B(P) is the identity"""
        report = check_unit_eta(big_embed(P3, 4))
        assert report.passed
        assert "inclusion is the identity at every level" in report.notes

    def test_unit_on_skeleton(self, v4):
        """Test η at B′(V4) is proper at level 3"""
        report = check_unit_eta(small_embed(v4, 3))
        assert report.passed
        assert "inclusion proper at levels [3]" in report.notes

    def test_triangles(self, P3):
        """Test both triangle identities"""
        report = check_triangle_identities(P3, 4)
        assert claims(report) == {"eta-at-B.identity": Verdict.PASS, "T-eta.identity": Verdict.PASS}

    def test_fully_faithful_z2(self, z2):
        """Test two homs on each side"""
        report = check_fully_faithful(z2, z2, 4)
        assert report.passed
        assert report.checks[0].detail == "2 magma homs, 2 symmetric set maps"

    def test_fully_faithful_trivial(self, trivial):
        """Test one hom on each side"""
        report = check_fully_faithful(trivial, trivial, 3)
        assert report.checks[0].detail == "1 magma homs, 1 symmetric set maps"

    def test_fully_faithful_mixed(self, P3, z2):
        """Test P3 into Z/2"""
        assert check_fully_faithful(P3, z2, 3).passed

    def test_induced_hom(self, P3):
        """Test B of the swap automorphism"""
        h = induced_hom_B(MagmaHom(source=P3, target=P3, mapping=(0, B, A)), 3)
        assert validate_symset_hom(h).passed

    def test_two_skeletal_equivalence(self, P3):
        """Test η′ is a bijection on B′(P3)"""
        report = check_2skeletal_equivalence(small_embed(P3, 4))
        assert report.passed
        assert len(report.checks) == 5

    def test_two_skeletal_precondition(self, P3):
        """Test B(P3) at N=3 with an empty D_3 is not 2-skeletal"""
        X = TruncatedPartialGroup.from_levels(P3, 3, {2: big_embed(P3, 2).level(2)})
        with pytest.raises(PreconditionError):
            check_2skeletal_equivalence(X)

    def test_final_remark(self, P3):
        """Test a magma equal to T(X) has a dagger"""
        report = check_final_remark(P3.magma, big_embed(P3, 3))
        assert report.passed

    def test_final_remark_table_mismatch(self, P3, z3):
        """Test the precondition on tables"""
        with pytest.raises(PreconditionError):
            check_final_remark(z3.magma, big_embed(P3, 3))


class TestStatementsOnB:
    """Test statements checked on B(P) directly"""

    @pytest.mark.parametrize("name", ["P3", "z3", "v4"])
    def test_inversion_closure(self, name, request):
        """Test w ∈ B iff w† ∈ B"""
        G = request.getfixturevalue(name)
        assert check_inversion_closure(G, 4).passed

    def test_main_theorem(self, P3):
        """Test doubled and prefixed words through length 2"""
        report = check_main_theorem(P3, 4)
        assert set(claims(report)) == {
            "main-theorem.doubled1",
            "main-theorem.prefixes1",
            "main-theorem.doubled2",
            "main-theorem.prefixes2",
        }
        assert report.passed

    def test_bp_partial_group(self, P3):
        """Test B(P3) validates"""
        report = check_bp_partial_group(P3, 4)
        assert report.verdict == Verdict.PASS
        assert report.construction == "bp-partial-group"

    def test_levels_differ(self, P3):
        """Test the first extra word"""
        X = big_embed(P3, 3)
        assert levels_differ(X, X) is None
        empty = TruncatedPartialGroup.from_levels(P3, 3, {})
        assert levels_differ(empty, X) == (2, (0, 0))
