"""
The embeddings B and B′, the underlying binary partial group T, skeleta,
and per-instance checks of the adjunction and equivalence statements.

In spine encoding the unit η: X → B(T(X)) is the levelwise inclusion, so
every natural-transformation check here is a comparison of level sets.
"""

from itertools import product as cartesian
from typing import Dict, List, Optional, Sequence, Set, Tuple

from loguru import logger

from src.algebra.magma import (
    BinaryPartialGroup,
    MagmaHom,
    Magmaish,
    PartialMagma,
    all_homs,
    as_magma,
    find_dagger,
    is_group,
    validate_hom,
)
from src.algebra.words import Word, bp_membership, format_word, word_dagger, words_of_length
from src.core.config import get_settings
from src.core.exceptions import (
    IntegrityError,
    NotABinaryPartialGroupError,
    PreconditionError,
    ResourceGuardError,
    StructuralError,
)
from src.core.reports import FunctorReport
from src.simplicial.symset import (
    SymSetHom,
    TruncatedPartialGroup,
    edge_matrix,
    maps_levels,
    total_product,
    validate_partial_group,
    validate_symset_hom,
)

MAX_FULLY_FAITHFUL_SIZE = 4


def _as_group(P: Magmaish) -> BinaryPartialGroup:
    if isinstance(P, BinaryPartialGroup):
        return P
    return BinaryPartialGroup.from_magma(P)


def _check_levels(N: int) -> None:
    settings = get_settings().verification
    if N < 2:
        raise StructuralError(f"Truncation level must be at least 2, got {N}")
    if N > settings.max_levels_safe and not settings.unsafe_large:
        raise ResourceGuardError(
            f"N={N} exceeds the safe bound {settings.max_levels_safe}; enable unsafe_large to proceed"
        )


# ===== Constructions =====

def big_embed(P: Magmaish, N: int, exhaustive: bool = False) -> TruncatedPartialGroup:
    """
    B(P): level n holds the words whose full parenthesizations all multiply
    to one value.

    Level n is grown from level n-1 by appending one letter, since a prefix
    of a coherent word is coherent. ``exhaustive`` tests every word instead.
    """
    _check_levels(N)
    G = _as_group(P)
    bound = max(N, get_settings().verification.max_word_length)
    levels: Dict[int, List[Word]] = {0: [()], 1: [(a,) for a in range(G.size)]}
    for n in range(2, N + 1):
        if exhaustive:
            candidates = words_of_length(G.size, n)
        else:
            candidates = (w + (a,) for w in levels[n - 1] for a in range(G.size))
        levels[n] = [w for w in candidates if bp_membership(G, w, bound=bound) is not None]
    X = TruncatedPartialGroup.from_levels(G, N, levels, label=f"B({G.label})")
    logger.debug(f"{X.label} level sizes {X.level_sizes()}")
    return X


def group_nerve(G: Magmaish, N: int) -> TruncatedPartialGroup:
    """Every word at every level; only for groups"""
    _check_levels(N)
    if not is_group(G):
        raise PreconditionError(f"{as_magma(G).label} is not a group")
    G = _as_group(G)
    levels = {n: list(words_of_length(G.size, n)) for n in range(N + 1)}
    return TruncatedPartialGroup.from_levels(G, N, levels, label=f"nerve({G.label})")


def pullback_words(
    matrix: Sequence[Sequence[int]],
    length: int,
    monotone_only: bool = False,
) -> Set[Word]:
    """
    Spines of every pullback of one simplex along maps [length] -> [n].

    ``matrix`` is the simplex's edge matrix; a walk through its vertices is
    a map and the edges it traverses are the pulled-back word.
    """
    vertices = range(len(matrix))
    frontier: Set[Tuple[int, Word]] = {(v, ()) for v in vertices}
    for _ in range(length):
        frontier = {
            (u, word + (matrix[v][u],))
            for v, word in frontier
            for u in vertices
            if not (monotone_only and u < v)
        }
    return {word for _, word in frontier}


def skeleton(
    X: TruncatedPartialGroup,
    k: int,
    monotone_only: bool = False,
    label: str = "",
) -> TruncatedPartialGroup:
    """
    sk_k(X): levels up to k kept, each higher level replaced by the pullbacks
    of simplices of dimension at most k.

    With ``monotone_only`` only order-preserving maps are used, giving the
    simplicial rather than the symmetric skeleton.
    """
    if not 2 <= k <= X.N:
        raise PreconditionError(f"Skeleton degree {k} outside 2..{X.N}")
    levels: Dict[int, Set[Word]] = {n: set(X.levels[n]) for n in range(k + 1)}
    for n in range(k + 1, X.N + 1):
        levels[n] = set()
    for m in range(k + 1):
        for w in X.sorted_level(m):
            matrix = edge_matrix(X, w)
            for n in range(k + 1, X.N + 1):
                levels[n] |= pullback_words(matrix, n, monotone_only)
    prefix = "msk" if monotone_only else "sk"
    return TruncatedPartialGroup.from_levels(
        X.carrier, X.N, levels, label=label or f"{prefix}_{k}({X.label})"
    )


def small_embed(P: Magmaish, N: int) -> TruncatedPartialGroup:
    """B′(P) = sk_2(B(P))"""
    G = _as_group(P)
    return skeleton(big_embed(G, N), 2, label=f"B′({G.label})")


def underlying_T(X: TruncatedPartialGroup, check_skeleton: bool = False) -> BinaryPartialGroup:
    """
    Carrier X_1 with ab defined exactly when (a, b) ∈ D_2, valued at its
    total product.

    The 2-skeleton comparison is opt-in and rebuilds sk_2(X) through level
    N. Pass ``check_skeleton=True`` for an X not built by B, B′ or sk_k.

    Raises:
        IntegrityError: the extracted magma admits no dagger, or with
            ``check_skeleton`` its 2-skeleton extracts a different table
    """
    size = X.carrier.size
    rows: List[List[Optional[int]]] = [[None] * size for _ in range(size)]
    for a, b in X.levels[2]:
        rows[a][b] = total_product(X, (a, b))
    magma = PartialMagma.from_rows(rows, names=X.names, unit=X.unit, label=f"T({X.label})")
    try:
        T = BinaryPartialGroup.from_magma(magma)
    except NotABinaryPartialGroupError as e:
        raise IntegrityError(f"{magma.label} is not a binary partial group: {e}") from e
    if check_skeleton and X.N >= 2:
        from_skeleton = underlying_T(skeleton(X, 2), check_skeleton=False)
        if from_skeleton.table != T.table:
            raise IntegrityError(f"T of the 2-skeleton differs from {magma.label}")
    return T


def induced_hom_B(f: MagmaHom, N: int) -> SymSetHom:
    """B(f): the level-1 map applied entrywise"""
    return SymSetHom(
        source=big_embed(_as_group(f.source), N),
        target=big_embed(_as_group(f.target), N),
        mapping=f.mapping,
    )


# ===== Adjunction and equivalence checks =====

def _level_difference(X: TruncatedPartialGroup, Y: TruncatedPartialGroup, n: int) -> List[Word]:
    return sorted(Y.levels[n] - X.levels[n])


def check_unit_eta(X: TruncatedPartialGroup) -> FunctorReport:
    """
    η: X → B(T(X)) is a levelwise inclusion and a map of symmetric sets.

    Levels where the inclusion is proper are listed in the notes.
    """
    report = FunctorReport(construction="eta", instances=[X.label])
    T = underlying_T(X)
    BT = big_embed(T, X.N)
    proper = []
    for n in range(X.N + 1):
        outside = sorted(X.levels[n] - BT.levels[n])
        report.record(
            f"eta.level{n}",
            not outside,
            witness=X.show(outside[0]) if outside else None,
            detail=f"{len(X.levels[n])} ⊆ {len(BT.levels[n])}",
        )
        if not outside and X.levels[n] != BT.levels[n]:
            proper.append(n)
    if report.passed:
        report.absorb("eta.hom", validate_symset_hom(SymSetHom.inclusion(X, BT)))
    report.notes.append(
        f"inclusion proper at levels {proper}" if proper else "inclusion is the identity at every level"
    )
    return report


def check_triangle_identities(P: Magmaish, N: int) -> FunctorReport:
    """T(η_X) = id at X = B(P), and η_{B(P)} = id levelwise"""
    G = _as_group(P)
    report = FunctorReport(construction="triangles", instances=[G.label])
    B = big_embed(G, N)
    T = underlying_T(B)
    BTB = big_embed(T, N)
    unequal = [n for n in range(N + 1) if B.levels[n] != BTB.levels[n]]
    report.record(
        "eta-at-B.identity",
        not unequal,
        witness=f"level {unequal[0]}" if unequal else None,
        detail="η_{B(P)} is the identity" if not unequal else None,
    )
    # T(η) is the level-1 part of the inclusion, the identity map of X_1
    tables_agree = T.table == G.table
    report.record(
        "T-eta.identity",
        tables_agree and validate_hom(MagmaHom(source=T, target=G, mapping=tuple(range(G.size)))).passed,
        witness=None if tables_agree else f"T(B({G.label})) table differs",
    )
    return report


def check_fully_faithful(P: Magmaish, Q: Magmaish, N: int) -> FunctorReport:
    """
    Magma homs P → Q and symmetric set maps B(P) → B(Q) coincide.

    A map of symmetric sets is determined by its level-1 function, so both
    sides range over the same |Q|^|P| candidates.
    """
    G, H = _as_group(P), _as_group(Q)
    if max(G.size, H.size) > MAX_FULLY_FAITHFUL_SIZE:
        raise PreconditionError(
            f"Hom-set comparison limited to {MAX_FULLY_FAITHFUL_SIZE} elements per side"
        )
    report = FunctorReport(construction="fully-faithful", instances=[G.label, H.label])
    BP, BQ = big_embed(G, N), big_embed(H, N)
    magma_homs = {f.mapping for f in all_homs(G, H)}
    symset_homs = set()
    for mapping in cartesian(range(H.size), repeat=G.size):
        if not maps_levels(BP, BQ, mapping):
            continue
        h = SymSetHom(source=BP, target=BQ, mapping=mapping)
        if validate_symset_hom(h, exhaustive=True).passed:
            symset_homs.add(mapping)
    mismatch = sorted(magma_homs ^ symset_homs)
    report.record(
        "fully-faithful.bijection",
        not mismatch,
        witness=str(mismatch[0]) if mismatch else None,
        detail=f"{len(magma_homs)} magma homs, {len(symset_homs)} symmetric set maps",
    )
    for mapping in sorted(magma_homs):
        h = induced_hom_B(MagmaHom(source=G, target=H, mapping=mapping), N)
        if not validate_symset_hom(h).passed:
            report.record("fully-faithful.induced", False, witness=str(mapping))
            break
    else:
        report.record("fully-faithful.induced", True)
    return report


def is_two_skeletal(X: TruncatedPartialGroup) -> bool:
    return skeleton(X, 2).levels == X.levels


def check_2skeletal_equivalence(X: TruncatedPartialGroup) -> FunctorReport:
    """
    η′: X → B′(T(X)) is a levelwise bijection.

    Raises:
        PreconditionError: X is not 2-skeletal
    """
    if not is_two_skeletal(X):
        raise PreconditionError(f"{X.label} is not 2-skeletal")
    report = FunctorReport(construction="two-skeletal", instances=[X.label])
    Y = small_embed(underlying_T(X), X.N)
    for n in range(X.N + 1):
        missing = _level_difference(X, Y, n)
        extra = _level_difference(Y, X, n)
        witness = None
        if missing:
            witness = f"{Y.show(missing[0])} only in B′(T(X))"
        elif extra:
            witness = f"{X.show(extra[0])} only in X"
        report.record(f"eta-prime.level{n}", not (missing or extra), witness=witness)
    return report


def check_final_remark(P: PartialMagma, X: TruncatedPartialGroup) -> FunctorReport:
    """
    A partial magma equal to T(X) is a binary partial group.

    Raises:
        PreconditionError: P's table differs from T(X)'s
    """
    magma = as_magma(P)
    T = underlying_T(X, check_skeleton=True)
    if magma.table != T.table:
        raise PreconditionError(f"{magma.label} does not have the table of {T.label}")
    report = FunctorReport(construction="final-remark", instances=[magma.label, X.label])
    search = find_dagger(magma)
    report.record(
        "final-remark.dagger",
        search.found,
        witness=search.report.violations[0].describe() if not search.found else None,
    )
    return report


# ===== Statements about B on single instances =====

def check_tb_identity(P: Magmaish, N: int) -> FunctorReport:
    """T(B(P)) has exactly P's table"""
    G = _as_group(P)
    report = FunctorReport(construction="tb-id", instances=[G.label])
    T = underlying_T(big_embed(G, N))
    witness = None
    for a in range(G.size):
        for b in range(G.size):
            if T.table[a][b] != G.table[a][b]:
                witness = f"({G.names[a]}, {G.names[b]}): {G.show(G.table[a][b])} vs {G.show(T.table[a][b])}"
                break
        if witness:
            break
    report.record("tb-id.table", witness is None, witness=witness)
    report.record("tb-id.dagger", T.dagger == G.dagger, witness=None if T.dagger == G.dagger else T.describe_dagger())
    return report


def check_inversion_closure(P: Magmaish, N: int) -> FunctorReport:
    """w ∈ B(P)_n iff w† ∈ B(P)_n, with total products exchanged by the dagger"""
    G = _as_group(P)
    report = FunctorReport(construction="inversion-closure", instances=[G.label])
    bound = max(N, get_settings().verification.max_word_length)
    for n in range(N + 1):
        witness = None
        for w in words_of_length(G.size, n):
            value = bp_membership(G, w, bound=bound)
            flipped = bp_membership(G, word_dagger(G, w), bound=bound)
            expected = None if value is None else G.dagger[value]
            if flipped != expected:
                witness = f"({format_word(G, w)}): {G.show(expected)} vs {G.show(flipped)}"
                break
        report.record(f"inversion-closure.level{n}", witness is None, witness=witness)
    return report


def check_main_theorem(P: Magmaish, N: int) -> FunctorReport:
    """
    For w = (a_1..a_n) ∈ B(P)_n and 0 ≤ k ≤ n, the word
    (a_k†, .., a_1†, a_1, .., a_n) lies in B(P)_{n+k} with total product
    a_{k+1}⋯a_n. At k = n this is w†w with total product 1.
    """
    G = _as_group(P)
    report = FunctorReport(construction="main-theorem", instances=[G.label])
    B = big_embed(G, N)
    for n in range(1, N // 2 + 1):
        doubled_witness = None
        prefix_witness = None
        for w in B.sorted_level(n):
            for k in range(n + 1):
                prefixed = word_dagger(G, w[:k]) + w
                expected = bp_membership(G, w[k:], bound=N)
                found = total_product(B, prefixed) if B.contains(prefixed) else None
                if found != expected:
                    text = f"({format_word(G, w)}), k={k}: {G.show(expected)} vs {G.show(found)}"
                    if k == n:
                        doubled_witness = doubled_witness or text
                    else:
                        prefix_witness = prefix_witness or text
        report.record(f"main-theorem.doubled{n}", doubled_witness is None, witness=doubled_witness)
        report.record(f"main-theorem.prefixes{n}", prefix_witness is None, witness=prefix_witness)
    report.notes.append(f"words checked through length {N // 2}")
    return report


def check_bp_partial_group(P: Magmaish, N: int, closure_mode: Optional[str] = None) -> FunctorReport:
    """B(P) passes every partial group check"""
    G = _as_group(P)
    return FunctorReport.from_validation(
        "bp-partial-group", validate_partial_group(big_embed(G, N), closure_mode=closure_mode)
    )


def check_skeleta(P: Magmaish, N: int, closure_mode: Optional[str] = None) -> FunctorReport:
    """sk_k(B(P)) is a partial group inside B(P), for k = 2, 3, 4, 5 up to N"""
    G = _as_group(P)
    report = FunctorReport(construction="skeleta", instances=[G.label])
    B = big_embed(G, N)
    for k in (2, 3, 4, 5):
        if k > N:
            report.notes.append(f"k={k} skipped above N={N}")
            continue
        S = skeleton(B, k)
        contained = all(S.levels[n] <= B.levels[n] for n in range(N + 1))
        report.record(f"skeleta.k{k}.subobject", contained)
        report.absorb(f"skeleta.k{k}.valid", validate_partial_group(S, closure_mode=closure_mode))
        report.record(f"skeleta.k{k}.idempotent", skeleton(S, k).levels == S.levels)
    return report


def check_t_skeleton_invariance(X: TruncatedPartialGroup) -> FunctorReport:
    """T(sk_2(X)) = T(X)"""
    report = FunctorReport(construction="t-skeleton", instances=[X.label])
    lhs = underlying_T(skeleton(X, 2))
    rhs = underlying_T(X)
    report.record("t-skeleton.table", lhs.table == rhs.table, witness=None if lhs.table == rhs.table else lhs.label)
    return report


def check_simplicial_two_skeleton(P: Magmaish, N: int) -> FunctorReport:
    """
    Closing levels 0..2 of B(P) under monotone maps alone yields a partial
    group exactly when P is trivial.
    """
    G = _as_group(P)
    report = FunctorReport(construction="simplicial-remark", instances=[G.label])
    S = skeleton(big_embed(G, N), 2, monotone_only=True)
    valid = validate_partial_group(S).passed
    trivial = G.size == 1
    report.record(
        "simplicial-remark",
        valid == trivial,
        witness=None if valid == trivial else f"valid={valid}, trivial={trivial}",
        detail="valid partial group" if valid else "not a partial group",
    )
    return report


def levels_differ(X: TruncatedPartialGroup, Y: TruncatedPartialGroup) -> Optional[Tuple[int, Word]]:
    """First (level, word) in Y but not X, in level then word order"""
    for n in range(min(X.N, Y.N) + 1):
        extra = sorted(Y.levels[n] - X.levels[n])
        if extra:
            return n, extra[0]
    return None
