"""
Truncated symmetric sets in spine encoding.

An n-simplex is stored as its spine, the word of its n principal edges, so
level n is a set of length-n words over the carrier. Arbitrary functions
[m] -> [n] act contravariantly: entry k of the pulled-back word is the
(f(k-1), f(k)) edge of the simplex.
"""

import random
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Set, Tuple

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from src.algebra.magma import BinaryPartialGroup, MagmaDocument
from src.algebra.words import Word, bp_membership, format_word, word_dagger
from src.core.config import get_settings
from src.core.exceptions import (
    ClosureViolationError,
    DocumentError,
    IntegrityError,
    NotABinaryPartialGroupError,
    PreconditionError,
    StructuralError,
)
from src.core.reports import ValidationReport


@dataclass(frozen=True)
class SimplexMap:
    """A function [m] -> [n]; monotonicity is not required"""

    source_dim: int
    target_dim: int
    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.source_dim < 0 or self.target_dim < 0:
            raise StructuralError("Simplex dimensions must be non-negative")
        if len(self.values) != self.source_dim + 1:
            raise StructuralError(
                f"[{self.source_dim}] -> [{self.target_dim}] needs {self.source_dim + 1} values, "
                f"got {len(self.values)}"
            )
        if any(not 0 <= v <= self.target_dim for v in self.values):
            raise StructuralError(f"Values {self.values} out of range for [{self.target_dim}]")

    def __call__(self, i: int) -> int:
        return self.values[i]

    def compose(self, other: "SimplexMap") -> "SimplexMap":
        """self ∘ other"""
        if other.target_dim != self.source_dim:
            raise StructuralError("Simplex maps are not composable")
        return SimplexMap(other.source_dim, self.target_dim, tuple(self.values[v] for v in other.values))

    @property
    def is_monotone(self) -> bool:
        return all(a <= b for a, b in zip(self.values, self.values[1:]))

    @classmethod
    def identity(cls, n: int) -> "SimplexMap":
        return cls(n, n, tuple(range(n + 1)))

    @classmethod
    def coface(cls, n: int, i: int) -> "SimplexMap":
        """δ_i: [n-1] -> [n] skipping i"""
        if not 0 <= i <= n or n < 1:
            raise StructuralError(f"No coface δ_{i} into [{n}]")
        return cls(n - 1, n, tuple(v for v in range(n + 1) if v != i))

    @classmethod
    def codegeneracy(cls, n: int, i: int) -> "SimplexMap":
        """σ_i: [n+1] -> [n] hitting i twice"""
        if not 0 <= i <= n:
            raise StructuralError(f"No codegeneracy σ_{i} onto [{n}]")
        return cls(n + 1, n, tuple(range(i + 1)) + tuple(range(i, n + 1)))

    @classmethod
    def reversal(cls, n: int) -> "SimplexMap":
        return cls(n, n, tuple(n - i for i in range(n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int) -> "SimplexMap":
        """Swap i and i+1 in [n]"""
        if not 0 <= i < n:
            raise StructuralError(f"No adjacent transposition at {i} in [{n}]")
        values = list(range(n + 1))
        values[i], values[i + 1] = values[i + 1], values[i]
        return cls(n, n, tuple(values))

    @classmethod
    def all_maps(cls, m: int, n: int) -> Iterator["SimplexMap"]:
        """All (n+1)^(m+1) functions, lexicographically"""
        for values in cartesian(range(n + 1), repeat=m + 1):
            yield cls(m, n, values)

    @classmethod
    def random(cls, m: int, n: int, rng: random.Random) -> "SimplexMap":
        return cls(m, n, tuple(rng.randint(0, n) for _ in range(m + 1)))

    def __str__(self) -> str:
        return f"[{self.source_dim}]→[{self.target_dim}]{self.values}"


@dataclass(frozen=True)
class TruncatedPartialGroup:
    """
    Levels D_0..D_N of words over a binary partial group carrier.

    Only shape is checked on construction; partial group axioms are
    checked by ``validate_partial_group``.
    """

    N: int
    carrier: BinaryPartialGroup
    levels: Tuple[FrozenSet[Word], ...]
    label: str = field(default="", compare=False)
    _memo: Dict[Any, Any] = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(frozenset(level) for level in self.levels))
        if self.N < 2:
            raise StructuralError(f"Truncation level must be at least 2, got {self.N}")
        if len(self.levels) != self.N + 1:
            raise StructuralError(f"Expected {self.N + 1} levels, got {len(self.levels)}")
        size = self.carrier.size
        for n, level in enumerate(self.levels):
            for w in level:
                if len(w) != n:
                    raise StructuralError(f"Word {w} of length {len(w)} placed in level {n}")
                if any(not 0 <= a < size for a in w):
                    raise StructuralError(f"Word {w} has entries out of range")
        if not self.label:
            object.__setattr__(self, "label", f"X({self.carrier.label}, N={self.N})")

    @classmethod
    def from_levels(
        cls,
        carrier: BinaryPartialGroup,
        N: int,
        levels: Mapping[int, Iterable[Sequence[int]]],
        label: str = "",
    ) -> "TruncatedPartialGroup":
        """Levels 0 and 1 default to the point and all of X_1; absent higher levels are empty"""
        full: List[FrozenSet[Word]] = []
        for n in range(N + 1):
            if n in levels:
                full.append(frozenset(tuple(w) for w in levels[n]))
            elif n == 0:
                full.append(frozenset({()}))
            elif n == 1:
                full.append(frozenset((a,) for a in range(carrier.size)))
            else:
                full.append(frozenset())
        unknown = [n for n in levels if not 0 <= n <= N]
        if unknown:
            raise StructuralError(f"Levels {unknown} outside 0..{N}")
        return cls(N=N, carrier=carrier, levels=tuple(full), label=label)

    @property
    def names(self) -> Tuple[str, ...]:
        return self.carrier.names

    @property
    def unit(self) -> int:
        return self.carrier.unit

    def level(self, n: int) -> FrozenSet[Word]:
        return self.levels[n]

    def contains(self, w: Sequence[int]) -> bool:
        w = tuple(w)
        return len(w) <= self.N and w in self.levels[len(w)]

    def sorted_level(self, n: int) -> List[Word]:
        return sorted(self.levels[n])

    def level_sizes(self) -> List[int]:
        return [len(level) for level in self.levels]

    def is_full(self, n: int) -> bool:
        """Level n is all of X_1^n"""
        return len(self.levels[n]) == self.carrier.size ** n

    def show(self, w: Sequence[int]) -> str:
        return f"({format_word(self.carrier, w)})"

    def to_document(self) -> Dict[str, Any]:
        return SymSetDocument.from_symset(self).model_dump(by_alias=True)

    @classmethod
    def from_document(cls, data: Dict[str, Any], label: str = "") -> "TruncatedPartialGroup":
        try:
            document = SymSetDocument.model_validate(data)
        except ValidationError as e:
            raise DocumentError(f"Malformed symmetric set document: {e}") from e
        return document.to_symset(label=label)

    def __str__(self) -> str:
        return self.label


class SymSetDocument(BaseModel):
    """JSON form of a truncated partial group; levels 0 and 1 are implied"""

    model_config = ConfigDict(populate_by_name=True)

    N: int = Field(..., ge=2)
    carrier: MagmaDocument
    dagger: List[Tuple[str, str]]
    levels: Dict[str, List[List[str]]] = Field(default_factory=dict)

    @classmethod
    def from_symset(cls, X: TruncatedPartialGroup) -> "SymSetDocument":
        names = X.names
        return cls(
            N=X.N,
            carrier=MagmaDocument.from_magma(X.carrier.magma),
            dagger=[(names[a], names[X.carrier.dagger[a]]) for a in range(X.carrier.size)],
            levels={
                str(n): [[names[a] for a in w] for w in X.sorted_level(n)]
                for n in range(2, X.N + 1)
            },
        )

    def to_symset(self, label: str = "") -> TruncatedPartialGroup:
        magma = self.carrier.to_magma(label=label)
        try:
            carrier = BinaryPartialGroup.from_magma(magma)
        except NotABinaryPartialGroupError as e:
            raise DocumentError(f"Carrier is not a binary partial group: {e}") from e
        given = dict(self.dagger)
        for a in range(carrier.size):
            name = carrier.names[a]
            if given.get(name) != carrier.names[carrier.dagger[a]]:
                raise DocumentError(
                    f"Dagger of {name} given as {given.get(name)!r}, "
                    f"carrier forces {carrier.names[carrier.dagger[a]]}"
                )
        levels: Dict[int, List[Word]] = {}
        for key, words in self.levels.items():
            try:
                n = int(key)
            except ValueError:
                raise DocumentError(f"Level key {key!r} is not an integer") from None
            levels[n] = [tuple(magma.index_of(name) for name in w) for w in words]
        return TruncatedPartialGroup.from_levels(carrier, self.N, levels, label=label)


# ===== Edges and the action =====

def edge_matrix(X: TruncatedPartialGroup, w: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    """
    All (i, j) edges of the simplex ``w``.

    Raises:
        IntegrityError: some subword is not coherently multipliable
    """
    w = tuple(w)
    key = ("edges", w)
    cached = X._memo.get(key)
    if cached is not None:
        return cached
    n = len(w)
    carrier = X.carrier
    matrix = [[carrier.unit] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            value = bp_membership(carrier, w[i:j], bound=n)
            if value is None:
                raise IntegrityError(
                    f"Subword {X.show(w[i:j])} of {X.show(w)} is not coherently multipliable"
                )
            matrix[i][j] = value
            matrix[j][i] = carrier.dagger[value]
    result = tuple(tuple(row) for row in matrix)
    X._memo[key] = result
    return result


def edge(X: TruncatedPartialGroup, w: Sequence[int], i: int, j: int) -> int:
    """Unit if i = j, the product a_{i+1}⋯a_j if i < j, its dagger if i > j"""
    n = len(w)
    if not (0 <= i <= n and 0 <= j <= n):
        raise StructuralError(f"Vertex out of range for a {n}-simplex: ({i}, {j})")
    return edge_matrix(X, w)[i][j]


def _require_simplex(X: TruncatedPartialGroup, w: Word) -> None:
    if not X.contains(w):
        raise PreconditionError(f"{X.show(w)} is not a simplex of {X.label}")


def act(
    X: TruncatedPartialGroup,
    f: SimplexMap,
    w: Sequence[int],
    strict: bool = False,
) -> Word:
    """
    Pull ``w`` back along ``f``.

    With ``strict`` a result outside D_m raises ClosureViolationError;
    otherwise validators compare the result against D_m themselves.
    """
    w = tuple(w)
    if len(w) != f.target_dim:
        raise StructuralError(f"{f} cannot act on a {len(w)}-simplex")
    if f.source_dim > X.N:
        raise PreconditionError(f"{f} leaves the truncation N={X.N}")
    _require_simplex(X, w)
    matrix = edge_matrix(X, w)
    values = f.values
    result = tuple(matrix[values[k - 1]][values[k]] for k in range(1, len(values)))
    if strict and result not in X.levels[f.source_dim]:
        raise ClosureViolationError(f"{f} sends {X.show(w)} to {X.show(result)}, outside D_{f.source_dim}")
    return result


def face(X: TruncatedPartialGroup, i: int, w: Sequence[int], strict: bool = False) -> Word:
    """d_i"""
    return act(X, SimplexMap.coface(len(w), i), w, strict)


def degeneracy(X: TruncatedPartialGroup, i: int, w: Sequence[int], strict: bool = False) -> Word:
    """s_i"""
    if len(w) + 1 > X.N:
        raise PreconditionError(f"s_{i} of a {len(w)}-simplex leaves the truncation N={X.N}")
    return act(X, SimplexMap.codegeneracy(len(w), i), w, strict)


def _contraction_values(X: TruncatedPartialGroup, w: Word) -> FrozenSet[Optional[int]]:
    """Values reached by every order of inner faces; None marks a dead end"""
    if len(w) == 1:
        return frozenset({w[0]})
    key = ("contract", w)
    cached = X._memo.get(key)
    if cached is not None:
        return cached
    table = X.carrier.table
    values: Set[Optional[int]] = set()
    for i in range(len(w) - 1):
        ab = table[w[i]][w[i + 1]]
        if ab is None:
            values.add(None)
            continue
        contracted = w[:i] + (ab,) + w[i + 2:]
        if contracted not in X.levels[len(contracted)]:
            values.add(None)
            continue
        values |= _contraction_values(X, contracted)
    result = frozenset(values)
    X._memo[key] = result
    return result


def total_product(X: TruncatedPartialGroup, w: Sequence[int]) -> int:
    """
    Iterate inner faces down to level 1.

    Raises:
        IntegrityError: two contraction orders disagree, or one leaves the level sets
    """
    w = tuple(w)
    _require_simplex(X, w)
    if len(w) == 0:
        return X.unit
    values = _contraction_values(X, w)
    if len(values) != 1 or None in values:
        shown = sorted(X.carrier.show(v) for v in values)
        raise IntegrityError(f"Contraction orders of {X.show(w)} give {shown}")
    return next(iter(values))


def check_contraction_orders(X: TruncatedPartialGroup, max_length: Optional[int] = None) -> ValidationReport:
    """Every order of inner faces gives the same total product, for n ≤ max_length"""
    max_length = max_length if max_length is not None else get_settings().verification.contraction_max_length
    report = ValidationReport(subject=f"contraction orders on {X.label}")
    for n in range(2, min(X.N, max_length) + 1):
        for w in X.sorted_level(n):
            try:
                total_product(X, w)
            except IntegrityError as e:
                report.add("contraction-order", [X.show(w)], "one value", str(e))
    report.notes.append(f"contraction orders checked through level {min(X.N, max_length)}")
    return report


# ===== Validation =====

def _closure_exhaustive(X: TruncatedPartialGroup, report: ValidationReport) -> None:
    """
    For each simplex, walk the complete graph on its vertices labelled by
    edges: a walk v_0..v_m is exactly a map [m] -> [n] and its label word is
    the pullback. States (last vertex, word) are deduplicated per level.
    Levels equal to X_1^m need no membership test.
    """
    N = X.N
    non_full = [m for m in range(N + 1) if not X.is_full(m)]
    top = max(non_full, default=0)
    if top == 0:
        report.notes.append("closure: every level is all of X_1^m, nothing to test")
        return
    for n in range(N + 1):
        for w in X.sorted_level(n):
            try:
                matrix = edge_matrix(X, w)
            except IntegrityError:
                continue  # coherence already reported
            vertices = range(n + 1)
            frontier: Dict[Tuple[int, Word], Tuple[int, ...]] = {(v, ()): (v,) for v in vertices}
            reported: Set[Word] = set()
            for m in range(1, top + 1):
                level = X.levels[m]
                full = X.is_full(m)
                advanced: Dict[Tuple[int, Word], Tuple[int, ...]] = {}
                for (v, word), path in frontier.items():
                    row = matrix[v]
                    for u in vertices:
                        pulled = word + (row[u],)
                        state = (u, pulled)
                        if state in advanced:
                            continue
                        if not full and pulled not in level:
                            if pulled not in reported:
                                reported.add(pulled)
                                f = SimplexMap(m, n, path + (u,))
                                report.add("closure", [X.show(w), str(f)], f"in D_{m}", X.show(pulled))
                            continue
                        advanced[state] = path + (u,)
                frontier = advanced


def _closure_generators(X: TruncatedPartialGroup, report: ValidationReport) -> None:
    """Cofaces, codegeneracies and adjacent transpositions only"""
    for n in range(X.N + 1):
        maps: List[SimplexMap] = []
        if n >= 1:
            maps += [SimplexMap.coface(n, i) for i in range(n + 1)]
            maps += [SimplexMap.transposition(n, i) for i in range(n)]
        if n + 1 <= X.N:
            maps += [SimplexMap.codegeneracy(n, i) for i in range(n + 1)]
        for w in X.sorted_level(n):
            for f in maps:
                try:
                    pulled = act(X, f, w)
                except IntegrityError:
                    continue
                if pulled not in X.levels[f.source_dim]:
                    report.add("closure", [X.show(w), str(f)], f"in D_{f.source_dim}", X.show(pulled))


def _check_simplicial_identities(X: TruncatedPartialGroup, report: ValidationReport) -> None:
    N = X.N

    def d(i: int, w: Word) -> Optional[Word]:
        out = act(X, SimplexMap.coface(len(w), i), w)
        return out if X.contains(out) else None

    def s(i: int, w: Word) -> Optional[Word]:
        if len(w) + 1 > N:
            return None
        out = act(X, SimplexMap.codegeneracy(len(w), i), w)
        return out if X.contains(out) else None

    def expect(name: str, w: Word, lhs: Optional[Word], rhs: Optional[Word]) -> None:
        if lhs is not None and rhs is not None and lhs != rhs:
            report.add("simplicial." + name, [X.show(w)], X.show(rhs), X.show(lhs))

    for n in range(N + 1):
        for w in X.sorted_level(n):
            try:
                edge_matrix(X, w)
            except IntegrityError:
                continue
            faces = {i: d(i, w) for i in range(n + 1)} if n >= 1 else {}
            degens = {j: s(j, w) for j in range(n + 1)} if n + 1 <= N else {}
            # d_i d_j = d_{j-1} d_i for i < j
            for j in range(n + 1):
                for i in range(j):
                    if n >= 2 and faces.get(j) is not None and faces.get(i) is not None:
                        expect(f"d{i}d{j}", w, d(i, faces[j]), d(j - 1, faces[i]))
            for j, sj in degens.items():
                if sj is None:
                    continue
                # d_j s_j = d_{j+1} s_j = id
                expect(f"d{j}s{j}", w, d(j, sj), w)
                expect(f"d{j + 1}s{j}", w, d(j + 1, sj), w)
                for i in range(n + 2):
                    if i < j and faces.get(i) is not None:
                        expect(f"d{i}s{j}", w, d(i, sj), s(j - 1, faces[i]))
                    elif i > j + 1 and faces.get(i - 1) is not None:
                        expect(f"d{i}s{j}", w, d(i, sj), s(j, faces[i - 1]))
                # s_i s_j = s_{j+1} s_i for i ≤ j
                if n + 2 <= N:
                    for i in range(j + 1):
                        si = degens.get(i)
                        if si is not None:
                            expect(f"s{i}s{j}", w, s(i, sj), s(j + 1, si))


def validate_partial_group(
    X: TruncatedPartialGroup,
    closure_mode: Optional[str] = None,
    check_identities: bool = True,
) -> ValidationReport:
    """
    Check reducedness, agreement of D_2 with the carrier table, coherence of
    every word, closure under SimplexMaps, the dagger condition through
    level N//2, the reversal action, and the simplicial identities.
    """
    closure_mode = closure_mode or get_settings().verification.closure_mode
    report = ValidationReport(subject=f"partial group {X.label}")
    carrier = X.carrier
    size = carrier.size
    logger.info(f"Validating {X.label}: level sizes {X.level_sizes()}")

    if X.levels[0] != frozenset({()}):
        report.add("reduced", [str(len(X.levels[0]))], "one vertex", f"{len(X.levels[0])} vertices")
    expected_level1 = frozenset((a,) for a in range(size))
    if X.levels[1] != expected_level1:
        missing = sorted(expected_level1 - X.levels[1])
        report.add("level1", [X.show(w) for w in missing], "all of X_1", "missing edges")

    for a in range(size):
        for b in range(size):
            defined = carrier.product(a, b) is not None
            if defined != ((a, b) in X.levels[2]):
                report.add(
                    "d2-table",
                    [carrier.names[a], carrier.names[b]],
                    "defined" if defined else "undefined",
                    "in D_2" if not defined else "absent from D_2",
                )

    for n in range(2, X.N + 1):
        for w in X.sorted_level(n):
            if bp_membership(carrier, w, bound=n) is None:
                report.add("coherence", [X.show(w)], "all parenthesizations agree", "incoherent")

    if closure_mode == "exhaustive":
        _closure_exhaustive(X, report)
        report.notes.append(f"closure: all maps [m]→[n], m, n ≤ {X.N}")
    else:
        _closure_generators(X, report)
        report.notes.append("closure: cofaces, codegeneracies, adjacent transpositions")

    half = X.N // 2
    for n in range(1, half + 1):
        for w in X.sorted_level(n):
            doubled = word_dagger(carrier, w) + w
            if doubled not in X.levels[2 * n]:
                report.add("dagger-condition", [X.show(w)], f"w†w in D_{2 * n}", "absent")
                continue
            try:
                value = total_product(X, doubled)
            except IntegrityError as e:
                report.add("dagger-condition", [X.show(w)], "total product 1", str(e))
                continue
            if value != carrier.unit:
                report.add("dagger-condition", [X.show(w)], carrier.names[carrier.unit], carrier.names[value])
    report.notes.append(f"dagger condition verified through level {half}")

    for n in range(1, X.N + 1):
        rho = SimplexMap.reversal(n)
        for w in X.sorted_level(n):
            try:
                reversed_w = act(X, rho, w)
            except IntegrityError:
                continue
            if n == 1 and reversed_w != (carrier.dagger[w[0]],):
                report.add("reversal.dagger", [X.show(w)], X.show((carrier.dagger[w[0]],)), X.show(reversed_w))
            if X.contains(reversed_w) and act(X, rho, reversed_w) != w:
                report.add("reversal.involution", [X.show(w)], X.show(w), X.show(act(X, rho, reversed_w)))

    if check_identities:
        _check_simplicial_identities(X, report)

    report.notes.append("Segal maps injective by construction (spine encoding)")
    logger.info(f"{X.label}: {report.verdict.value} ({len(report.violations)} violations)")
    return report


# ===== Maps of symmetric sets =====

@dataclass(frozen=True)
class SymSetHom:
    """A map determined by its level-1 function, applied entrywise"""

    source: TruncatedPartialGroup
    target: TruncatedPartialGroup
    mapping: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(self.mapping))
        if len(self.mapping) != self.source.carrier.size:
            raise StructuralError("Level-1 map is not total on the source")
        if any(not 0 <= x < self.target.carrier.size for x in self.mapping):
            raise StructuralError(f"Level-1 map values out of range: {self.mapping}")

    def apply(self, w: Sequence[int]) -> Word:
        return tuple(self.mapping[a] for a in w)

    @classmethod
    def inclusion(cls, source: TruncatedPartialGroup, target: TruncatedPartialGroup) -> "SymSetHom":
        if source.carrier.size != target.carrier.size:
            raise PreconditionError("Inclusion needs equal carriers")
        return cls(source=source, target=target, mapping=tuple(range(source.carrier.size)))


def maps_levels(source: TruncatedPartialGroup, target: TruncatedPartialGroup, mapping: Sequence[int]) -> bool:
    """Entrywise image of every D_n(source) lies in D_n(target)"""
    for n in range(2, source.N + 1):
        target_level = target.levels[n]
        for w in source.levels[n]:
            if tuple(mapping[a] for a in w) not in target_level:
                return False
    return True


def validate_symset_hom(
    h: SymSetHom,
    spot_checks: Optional[int] = None,
    seed: Optional[int] = None,
    exhaustive: bool = False,
) -> ValidationReport:
    """
    Every level maps into the corresponding level; compatibility with the
    action is spot-checked on seeded random SimplexMaps.

    With ``exhaustive`` every edge of every simplex is compared instead.
    Pullbacks are read off the edge matrix, so this covers all maps.
    """
    settings = get_settings().verification
    spot_checks = spot_checks if spot_checks is not None else settings.spot_checks
    seed = seed if seed is not None else settings.seed
    if h.source.N != h.target.N:
        raise PreconditionError(f"Truncation levels differ: {h.source.N} vs {h.target.N}")
    report = ValidationReport(subject=f"symmetric set map {h.source.label} → {h.target.label}")
    for n in range(h.source.N + 1):
        for w in h.source.sorted_level(n):
            image = h.apply(w)
            if image not in h.target.levels[n]:
                report.add("symset-hom.level", [h.source.show(w)], f"in D_{n} of target", h.target.show(image))
    if not report.passed:
        return report

    if exhaustive:
        mapping = h.mapping
        for n in range(h.source.N + 1):
            for w in h.source.sorted_level(n):
                source_edges = edge_matrix(h.source, w)
                target_edges = edge_matrix(h.target, h.apply(w))
                for i in range(n + 1):
                    for j in range(n + 1):
                        if mapping[source_edges[i][j]] != target_edges[i][j]:
                            report.add(
                                "symset-hom.act",
                                [h.source.show(w), f"edge({i},{j})"],
                                h.target.carrier.names[target_edges[i][j]],
                                h.target.carrier.names[mapping[source_edges[i][j]]],
                            )
                            return report
        report.notes.append("action compatibility checked on every edge")
    elif spot_checks > 0 and any(h.source.levels):
        rng = random.Random(seed)
        populated = [n for n in range(h.source.N + 1) if h.source.levels[n]]
        for _ in range(spot_checks):
            n = rng.choice(populated)
            w = rng.choice(h.source.sorted_level(n))
            f = SimplexMap.random(rng.randint(0, h.source.N), n, rng)
            lhs = h.apply(act(h.source, f, w))
            rhs = act(h.target, f, h.apply(w))
            if lhs != rhs:
                report.add("symset-hom.act", [h.source.show(w), str(f)], h.target.show(rhs), h.target.show(lhs))
        report.notes.append(f"action compatibility spot-checked on {spot_checks} maps (seed {seed})")
    return report
