"""
Unit tests for truncated symmetric sets: the action, validation and maps.
"""

from functools import lru_cache

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from src.algebra.catalog import p3
from src.core.exceptions import (
    ClosureViolationError,
    DocumentError,
    IntegrityError,
    PreconditionError,
    StructuralError,
)
from src.simplicial.functors import big_embed
from src.simplicial.symset import (
    SimplexMap,
    SymSetHom,
    TruncatedPartialGroup,
    act,
    check_contraction_orders,
    degeneracy,
    edge,
    face,
    total_product,
    validate_partial_group,
    validate_symset_hom,
)

A, B = 1, 2


@pytest.fixture
def bp3(P3):
    return big_embed(P3, 4)


@pytest.fixture
def broken(P3):
    """P3 at N=2 with (a, b) and (b, a) missing from D_2"""
    return TruncatedPartialGroup.from_levels(
        P3, 2, {2: [(0, 0), (0, A), (0, B), (A, 0), (B, 0)]}, label="broken"
    )


class TestSimplexMap:
    """Test maps [m] -> [n]"""

    def test_coface_and_codegeneracy(self):
        """Test the standard generators"""
        assert SimplexMap.coface(2, 1).values == (0, 2)
        assert SimplexMap.codegeneracy(1, 0).values == (0, 0, 1)
        assert SimplexMap.reversal(2).values == (2, 1, 0)
        assert SimplexMap.transposition(2, 0).values == (1, 0, 2)

    def test_values_checked(self):
        """Test arity and range"""
        with pytest.raises(StructuralError):
            SimplexMap(1, 1, (0,))
        with pytest.raises(StructuralError):
            SimplexMap(1, 1, (0, 2))

    def test_compose(self):
        """Test self ∘ other"""
        f = SimplexMap.reversal(2)
        g = SimplexMap.coface(2, 0)
        assert f.compose(g).values == (1, 0)
        with pytest.raises(StructuralError):
            g.compose(g)

    def test_monotone(self):
        """Test monotonicity flag"""
        assert SimplexMap.codegeneracy(2, 1).is_monotone
        assert not SimplexMap.reversal(1).is_monotone

    def test_all_maps_count(self):
        """Test (n+1)^(m+1) maps"""
        assert len(list(SimplexMap.all_maps(2, 1))) == 8

    def test_str(self):
        """Test display form"""
        assert str(SimplexMap.identity(1)) == "[1]→[1](0, 1)"


class TestLevels:
    """Test level storage and documents"""

    def test_bp3_level_sizes(self, bp3):
        """Test D_2 drops aa and bb"""
        sizes = bp3.level_sizes()
        assert sizes[:4] == [1, 3, 7, 15]
        assert bp3.contains((A, B))
        assert bp3.contains((B, A))
        assert not bp3.contains((A, A))
        assert bp3.contains((A, B, A))
        assert not bp3.contains((A, 0, A))

    def test_wrong_length_word_rejected(self, P3):
        """Test a word in the wrong level"""
        with pytest.raises(StructuralError):
            TruncatedPartialGroup.from_levels(P3, 2, {2: [(A,)]})

    def test_level_outside_range(self, P3):
        """Test level keys above N"""
        with pytest.raises(StructuralError):
            TruncatedPartialGroup.from_levels(P3, 2, {3: []})

    def test_truncation_at_least_two(self, P3):
        """Test N < 2"""
        with pytest.raises(StructuralError):
            TruncatedPartialGroup.from_levels(P3, 1, {})

    def test_document_round_trip(self, bp3):
        """Test levels survive the document"""
        document = bp3.to_document()
        assert document["N"] == 4
        assert ["a", "b"] in document["levels"]["2"]
        restored = TruncatedPartialGroup.from_document(document)
        assert restored.levels == bp3.levels

    def test_document_with_wrong_dagger(self, bp3):
        """Test a dagger the carrier does not force"""
        document = bp3.to_document()
        document["dagger"] = [["1", "1"], ["a", "a"], ["b", "b"]]
        with pytest.raises(DocumentError):
            TruncatedPartialGroup.from_document(document)

    def test_document_with_bad_carrier(self, bp3):
        """Test a carrier without a dagger"""
        document = bp3.to_document()
        document["carrier"]["products"] = []
        with pytest.raises(DocumentError):
            TruncatedPartialGroup.from_document(document)

    def test_document_missing_n(self):
        """Test schema errors"""
        with pytest.raises(DocumentError):
            TruncatedPartialGroup.from_document({"carrier": {}})


class TestAction:
    """Test edges, faces, degeneracies and the general action"""

    def test_edges(self, bp3):
        """Test products above and daggers below the diagonal"""
        assert edge(bp3, (A, B), 0, 2) == 0
        assert edge(bp3, (A, B), 0, 1) == A
        assert edge(bp3, (A, B), 2, 1) == A
        assert edge(bp3, (A, B), 1, 1) == 0
        with pytest.raises(StructuralError):
            edge(bp3, (A, B), 0, 3)

    def test_faces(self, bp3):
        """Test d_0, d_1 and d_2 of (a, b)"""
        assert face(bp3, 0, (A, B)) == (B,)
        assert face(bp3, 1, (A, B)) == (0,)
        assert face(bp3, 2, (A, B)) == (A,)

    def test_degeneracy(self, bp3):
        """Test s_0 inserts the unit"""
        assert degeneracy(bp3, 0, (A,)) == (0, A)
        assert degeneracy(bp3, 1, (A,)) == (A, 0)

    def test_non_monotone_action(self, bp3):
        """Test a map doubling back along an edge"""
        f = SimplexMap(3, 2, (0, 1, 2, 1))
        assert act(bp3, f, (A, B)) == (A, B, A)

    def test_reversal_gives_dagger(self, bp3):
        """Test reversing a 1-simplex"""
        assert act(bp3, SimplexMap.reversal(1), (A,)) == (B,)

    def test_act_requires_simplex(self, bp3):
        """Test a word outside the levels"""
        with pytest.raises(PreconditionError):
            act(bp3, SimplexMap.identity(2), (A, A))

    def test_act_dimension_mismatch(self, bp3):
        """Test map target and simplex dimension must agree"""
        with pytest.raises(StructuralError):
            act(bp3, SimplexMap.identity(1), (A, B))

    def test_act_beyond_truncation(self, bp3):
        """Test source dimensions above N"""
        with pytest.raises(PreconditionError):
            act(bp3, SimplexMap(5, 1, (0,) * 6), (A,))

    def test_degeneracy_beyond_truncation(self, bp3):
        """Test s_i at the top level"""
        with pytest.raises(PreconditionError):
            degeneracy(bp3, 0, (A, B, A, B))

    def test_strict_action(self, broken):
        """Test a pullback outside D_m raises when strict"""
        f = SimplexMap(2, 1, (0, 1, 0))
        assert act(broken, f, (A,)) == (A, B)
        with pytest.raises(ClosureViolationError):
            act(broken, f, (A,), strict=True)

    def test_total_product(self, bp3):
        """Test contraction to level 1"""
        assert total_product(bp3, (A, B, A)) == A
        assert total_product(bp3, ()) == 0
        assert check_contraction_orders(bp3).passed


class TestValidation:
    """Test partial group validation"""

    def test_big_embedding_is_partial_group(self, bp3):
        """Test B(P3) passes every check"""
        report = validate_partial_group(bp3)
        assert report.passed, [v.describe() for v in report.violations]
        assert "dagger condition verified through level 2" in report.notes

    def test_generator_closure_mode(self, bp3):
        """Test the generator-only closure check"""
        assert validate_partial_group(bp3, closure_mode="generators").passed

    def test_broken_levels(self, broken):
        """Test missing products are reported under several axioms"""
        report = validate_partial_group(broken)
        axioms = {v.axiom for v in report.violations}
        assert {"d2-table", "closure", "dagger-condition"} <= axioms

    def test_no_vertex(self, P3):
        """Test an empty level 0 and an empty D_2"""
        X = TruncatedPartialGroup(
            N=2,
            carrier=P3,
            levels=(frozenset(), frozenset({(0,), (A,), (B,)}), frozenset()),
        )
        axioms = {v.axiom for v in validate_partial_group(X).violations}
        assert {"reduced", "d2-table"} <= axioms

    def test_missing_edges(self, P3):
        """Test level 1 must be all of the carrier"""
        X = TruncatedPartialGroup.from_levels(P3, 2, {1: [(0,), (A,)]})
        report = validate_partial_group(X)
        assert "level1" in {v.axiom for v in report.violations}

    def test_incoherent_word(self, P3):
        """Test an incoherent word in D_3"""
        bp = big_embed(P3, 3)
        X = TruncatedPartialGroup.from_levels(
            P3, 3, {2: bp.level(2), 3: set(bp.level(3)) | {(A, 0, A)}}
        )
        report = validate_partial_group(X)
        assert "coherence" in {v.axiom for v in report.violations}


class TestSymSetHom:
    """Test maps of symmetric sets"""

    def test_identity_map(self, bp3):
        """Test the identity passes both checks"""
        h = SymSetHom.inclusion(bp3, bp3)
        assert validate_symset_hom(h).passed
        report = validate_symset_hom(h, exhaustive=True)
        assert report.passed
        assert "action compatibility checked on every edge" in report.notes

    def test_level_failure(self, bp3):
        """Test the constant map to a sends (1, 1) outside D_2"""
        h = SymSetHom(source=bp3, target=bp3, mapping=(A, A, A))
        report = validate_symset_hom(h)
        assert [v.axiom for v in report.violations][:1] == ["symset-hom.level"]

    def test_swap_is_an_automorphism(self, bp3):
        """Test exchanging a and b"""
        h = SymSetHom(source=bp3, target=bp3, mapping=(0, B, A))
        assert validate_symset_hom(h, exhaustive=True).passed

    def test_levels_must_agree(self, P3):
        """Test unequal truncations"""
        h = SymSetHom(source=big_embed(P3, 3), target=big_embed(P3, 4), mapping=(0, A, B))
        with pytest.raises(PreconditionError):
            validate_symset_hom(h)

    def test_mapping_range(self, bp3):
        """Test mapping values index the target carrier"""
        with pytest.raises(StructuralError):
            SymSetHom(source=bp3, target=bp3, mapping=(0, 1, 3))


@lru_cache(maxsize=1)
def _bp3():
    return big_embed(p3(), 4)


@settings(max_examples=80, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.data())
def test_action_is_contravariant(data):
    X = _bp3()
    n = data.draw(st.integers(min_value=0, max_value=X.N))
    w = data.draw(st.sampled_from(X.sorted_level(n)))
    m = data.draw(st.integers(min_value=0, max_value=X.N))
    k = data.draw(st.integers(min_value=0, max_value=X.N))
    f = SimplexMap(m, n, tuple(data.draw(st.integers(0, n)) for _ in range(m + 1)))
    g = SimplexMap(k, m, tuple(data.draw(st.integers(0, m)) for _ in range(k + 1)))
    assert act(X, f.compose(g), w) == act(X, g, act(X, f, w))


def test_incoherent_edges_raise(P3):
    """Test edge matrices need coherent subwords"""
    X = TruncatedPartialGroup.from_levels(P3, 3, {3: [(A, 0, A)]})
    with pytest.raises(IntegrityError):
        edge(X, (A, 0, A), 0, 3)
