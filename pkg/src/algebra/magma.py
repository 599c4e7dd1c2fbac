"""
Finite unital partial magmas as partial Cayley tables.

Elements are addressed by their index into the structure's ordered element
list; display names only appear at the edges (documents, reports). A table
entry ``table[a][b]`` is the index of ``ab`` or ``None`` when the product is
undefined.
"""

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union
from pydantic import BaseModel, Field, ValidationError
from loguru import logger

from src.core.exceptions import (
    DocumentError,
    NotABinaryPartialGroupError,
    StructuralError,
)
from src.core.reports import ValidationReport

Table = Tuple[Tuple[Optional[int], ...], ...]

UNDEFINED = "undefined"


def check_table_structure(table: Sequence[Sequence[Optional[int]]], unit: int) -> None:
    """
    Raise StructuralError unless ``table`` is square with in-range entries.
    """
    size = len(table)
    if size == 0:
        raise StructuralError("Table is empty")
    for i, row in enumerate(table):
        if len(row) != size:
            raise StructuralError(f"Table is not square: row {i} has {len(row)} entries, expected {size}")
        for j, entry in enumerate(row):
            if entry is None:
                continue
            if not isinstance(entry, int) or isinstance(entry, bool) or not 0 <= entry < size:
                raise StructuralError(f"Entry ({i}, {j}) = {entry!r} is out of range")
    if not isinstance(unit, int) or not 0 <= unit < size:
        raise StructuralError(f"Unit index {unit!r} out of range for {size} elements")


def default_names(size: int) -> Tuple[str, ...]:
    """Names used for generated structures: 1, a, b, c, ..."""
    letters = "abcdefghijklmnopqrstuvwxyz"
    if size - 1 > len(letters):
        return ("1",) + tuple(f"x{i}" for i in range(1, size))
    return ("1",) + tuple(letters[: size - 1])


@dataclass(frozen=True)
class PartialMagma:
    """
    A finite set with an element ``unit`` and a partial binary product.

    The table is checked for shape on construction; the unit laws are
    checked by ``validate_unital`` so that violating tables can still be
    represented and reported on.
    """

    names: Tuple[str, ...]
    unit: int
    table: Table
    label: str = field(default="", compare=False)
    _memo: Dict[Any, Any] = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))
        check_table_structure(self.table, self.unit)
        if len(self.names) != len(self.table):
            raise StructuralError(
                f"{len(self.names)} names given for a {len(self.table)}-element table"
            )
        if len(set(self.names)) != len(self.names):
            raise StructuralError(f"Element names are not distinct: {self.names}")
        if not self.label:
            object.__setattr__(self, "label", f"magma[{len(self.names)}]")

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[Optional[int]]],
        names: Optional[Sequence[str]] = None,
        unit: int = 0,
        label: str = "",
    ) -> "PartialMagma":
        """Build from a raw table; names default to 1, a, b, ..."""
        return cls(
            names=tuple(names) if names is not None else default_names(len(rows)),
            unit=unit,
            table=tuple(tuple(row) for row in rows),
            label=label,
        )

    @classmethod
    def from_products(
        cls,
        names: Sequence[str],
        products: Sequence[Tuple[str, str, str]],
        unit: Optional[str] = None,
        label: str = "",
    ) -> "PartialMagma":
        """
        Build from (left, right, result) name triples.

        Products with the unit on either side are implied unless listed.
        Listing the same (left, right) pair twice is a structural error.
        """
        names = list(names)
        unit_name = unit if unit is not None else names[0]
        if unit_name not in names:
            raise StructuralError(f"Unit {unit_name!r} is not an element")
        # unit first in canonical form
        names.remove(unit_name)
        names.insert(0, unit_name)
        index = {name: i for i, name in enumerate(names)}
        if len(index) != len(names):
            raise StructuralError(f"Element names are not distinct: {names}")

        size = len(names)
        table: List[List[Optional[int]]] = [[None] * size for _ in range(size)]
        listed = set()
        for triple in products:
            if len(triple) != 3:
                raise StructuralError(f"Product entry {triple!r} is not a triple")
            left, right, result = triple
            for name in (left, right, result):
                if name not in index:
                    raise StructuralError(f"Unknown element {name!r} in product {triple!r}")
            pair = (index[left], index[right])
            if pair in listed:
                raise StructuralError(f"Duplicate product for ({left}, {right})")
            listed.add(pair)
            table[pair[0]][pair[1]] = index[result]
        for a in range(size):
            if (0, a) not in listed:
                table[0][a] = a
            if (a, 0) not in listed:
                table[a][0] = a
        return cls(names=tuple(names), unit=0, table=tuple(map(tuple, table)), label=label)

    @property
    def size(self) -> int:
        return len(self.names)

    def product(self, a: int, b: int) -> Optional[int]:
        """``ab`` or None when undefined"""
        return self.table[a][b]

    def is_defined(self, a: int, b: int) -> bool:
        return self.table[a][b] is not None

    def defined_pairs(self) -> Iterator[Tuple[int, int, int]]:
        """All (a, b, ab) with ab defined, row-major"""
        for a, row in enumerate(self.table):
            for b, ab in enumerate(row):
                if ab is not None:
                    yield a, b, ab

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise StructuralError(f"Unknown element {name!r}") from None

    def show(self, x: Optional[int]) -> str:
        return UNDEFINED if x is None else self.names[x]

    def relabel(self, perm: Sequence[int], names: Optional[Sequence[str]] = None) -> "PartialMagma":
        """
        Transport the structure along the bijection ``i -> perm[i]``.

        The result has ``table[perm[a]][perm[b]] = perm[ab]``.
        """
        size = self.size
        inverse = [0] * size
        for i, p in enumerate(perm):
            inverse[p] = i
        rows = []
        for x in range(size):
            row = []
            for y in range(size):
                xy = self.table[inverse[x]][inverse[y]]
                row.append(None if xy is None else perm[xy])
            rows.append(tuple(row))
        new_names = tuple(names) if names is not None else tuple(self.names[inverse[i]] for i in range(size))
        return PartialMagma(names=new_names, unit=perm[self.unit], table=tuple(rows), label=self.label)

    def encoding(self) -> Tuple[int, ...]:
        """Row-major table with undefined as -1, for ordering and hashing"""
        return tuple(-1 if x is None else x for row in self.table for x in row)

    def to_document(self) -> Dict[str, Any]:
        return MagmaDocument.from_magma(self).model_dump()

    @classmethod
    def from_document(cls, data: Dict[str, Any], label: str = "") -> "PartialMagma":
        try:
            document = MagmaDocument.model_validate(data)
        except ValidationError as e:
            raise DocumentError(f"Malformed partial magma document: {e}") from e
        return document.to_magma(label=label)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class BinaryPartialGroup:
    """
    A unital partial magma together with its (unique) dagger.

    Construct through ``BinaryPartialGroup.from_magma`` unless the dagger is
    already known to be valid.
    """

    magma: PartialMagma
    dagger: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dagger", tuple(self.dagger))
        if len(self.dagger) != self.magma.size:
            raise StructuralError(f"Dagger has {len(self.dagger)} entries for {self.magma.size} elements")
        if any(not 0 <= d < self.magma.size for d in self.dagger):
            raise StructuralError(f"Dagger entries out of range: {self.dagger}")

    @classmethod
    def from_magma(cls, magma: PartialMagma) -> "BinaryPartialGroup":
        """
        Validate ``magma`` and attach its dagger.

        Raises:
            NotABinaryPartialGroupError: unit laws fail or no dagger exists
        """
        unital = validate_unital(magma.table, magma.unit, magma.names)
        if not unital.passed:
            raise NotABinaryPartialGroupError(f"{magma.label} violates the unit laws", unital)
        search = find_dagger(magma)
        if search.dagger is None:
            raise NotABinaryPartialGroupError(f"{magma.label} admits no dagger", search.report)
        return cls(magma=magma, dagger=search.dagger)

    @property
    def names(self) -> Tuple[str, ...]:
        return self.magma.names

    @property
    def unit(self) -> int:
        return self.magma.unit

    @property
    def size(self) -> int:
        return self.magma.size

    @property
    def table(self) -> Table:
        return self.magma.table

    @property
    def label(self) -> str:
        return self.magma.label

    def product(self, a: int, b: int) -> Optional[int]:
        return self.magma.table[a][b]

    def show(self, x: Optional[int]) -> str:
        return self.magma.show(x)

    def describe_dagger(self) -> str:
        """E.g. ``a↔b`` for a swap; fixed non-unit elements as ``a↦a``"""
        parts = []
        for a in range(self.size):
            d = self.dagger[a]
            if a == self.unit:
                continue
            if d == a:
                parts.append(f"{self.names[a]}↦{self.names[a]}")
            elif a < d:
                parts.append(f"{self.names[a]}↔{self.names[d]}")
        return ", ".join(parts) if parts else "identity"

    def __str__(self) -> str:
        return self.label


Magmaish = Union[PartialMagma, BinaryPartialGroup]


def as_magma(P: Magmaish) -> PartialMagma:
    return P.magma if isinstance(P, BinaryPartialGroup) else P


class MagmaDocument(BaseModel):
    """JSON form of a partial magma"""

    elements: List[str] = Field(..., min_length=1)
    unit: str
    products: List[Tuple[str, str, str]] = Field(default_factory=list)

    @classmethod
    def from_magma(cls, magma: PartialMagma) -> "MagmaDocument":
        unit = magma.unit
        order = [unit] + [i for i in range(magma.size) if i != unit]
        products = []
        for a in order:
            for b in order:
                ab = magma.table[a][b]
                implied = b if a == unit else (a if b == unit else None)
                if a == unit or b == unit:
                    if ab == implied:
                        continue
                    if ab is None:
                        raise StructuralError(
                            f"({magma.names[a]}, {magma.names[b]}) undefined next to the unit "
                            f"cannot be serialized"
                        )
                if ab is not None:
                    products.append((magma.names[a], magma.names[b], magma.names[ab]))
        return cls(
            elements=[magma.names[i] for i in order],
            unit=magma.names[unit],
            products=products,
        )

    def to_magma(self, label: str = "") -> PartialMagma:
        return PartialMagma.from_products(self.elements, self.products, self.unit, label=label)


# ===== Unit laws =====

def validate_unital(
    table: Sequence[Sequence[Optional[int]]],
    unit: int,
    names: Optional[Sequence[str]] = None,
) -> ValidationReport:
    """
    Check ``1a = a = a1`` for every element.

    Raises:
        StructuralError: table is not square or has out-of-range entries
    """
    check_table_structure(table, unit)
    size = len(table)
    names = tuple(names) if names is not None else tuple(str(i) for i in range(size))

    def show(x: Optional[int]) -> str:
        return UNDEFINED if x is None else names[x]

    report = ValidationReport(subject="unit laws")
    for a in range(size):
        if table[unit][a] != a:
            report.add("unit.left", [names[unit], names[a]], names[a], show(table[unit][a]))
        if table[a][unit] != a:
            report.add("unit.right", [names[a], names[unit]], names[a], show(table[a][unit]))
    return report


# ===== Dagger =====

def _first_failure(P: PartialMagma, a: int, c: int) -> Optional[Tuple[str, int]]:
    """First (condition, b) at which ``c`` fails as a dagger of ``a``"""
    table = P.table
    for b in range(P.size):
        ab = table[a][b]
        if ab is not None and table[c][ab] != b:
            return "dagger.left", b
    for b in range(P.size):
        ba = table[b][a]
        if ba is not None and table[ba][c] != b:
            return "dagger.right", b
    return None


def satisfies_left(P: Magmaish, a: int, c: int) -> bool:
    """``c(ab) = b`` whenever ``ab`` is defined"""
    table = as_magma(P).table
    for b, ab in enumerate(table[a]):
        if ab is not None and table[c][ab] != b:
            return False
    return True


def satisfies_right(P: Magmaish, a: int, c: int) -> bool:
    """``(ba)c = b`` whenever ``ba`` is defined"""
    table = as_magma(P).table
    for b in range(len(table)):
        ba = table[b][a]
        if ba is not None and table[ba][c] != b:
            return False
    return True


def one_sided_candidates(P: Magmaish, a: int) -> Tuple[List[int], List[int]]:
    """Candidates for ``a`` satisfying only the left condition, and only the right one"""
    size = as_magma(P).size
    left = [c for c in range(size) if satisfies_left(P, a, c)]
    right = [c for c in range(size) if satisfies_right(P, a, c)]
    return left, right


def dagger_candidates(P: Magmaish, a: int) -> List[int]:
    """Every ``c`` satisfying both dagger conditions for ``a``"""
    size = as_magma(P).size
    return [c for c in range(size) if satisfies_left(P, a, c) and satisfies_right(P, a, c)]


@dataclass
class DaggerSearch:
    """Outcome of ``find_dagger``"""
    dagger: Optional[Tuple[int, ...]]
    report: ValidationReport

    @property
    def found(self) -> bool:
        return self.dagger is not None


def find_dagger(P: Magmaish) -> DaggerSearch:
    """
    Search each element's candidate images exhaustively.

    Returns the dagger when every element has exactly one candidate. An
    element with none is reported with, for each candidate, the condition
    and the ``b`` at which it fails.
    """
    magma = as_magma(P)
    memo_key = ("dagger",)
    if memo_key in magma._memo:
        return magma._memo[memo_key]

    report = ValidationReport(subject=f"dagger search on {magma.label}")
    dagger: List[int] = []
    for a in range(magma.size):
        candidates = dagger_candidates(magma, a)
        if not candidates:
            failures = []
            for c in range(magma.size):
                failure = _first_failure(magma, a, c)
                if failure is not None:
                    condition, b = failure
                    failures.append(f"{magma.names[c]}: {condition} at b={magma.names[b]}")
            report.add("dagger.missing", [magma.names[a]], "some a†", "; ".join(failures))
        elif len(candidates) > 1:
            report.add(
                "dagger.non-unique",
                [magma.names[a]] + [magma.names[c] for c in candidates],
                "one candidate",
                f"{len(candidates)} candidates",
            )
        else:
            dagger.append(candidates[0])

    result = DaggerSearch(
        dagger=tuple(dagger) if report.passed else None,
        report=report,
    )
    magma._memo[memo_key] = result
    logger.debug(f"Dagger search on {magma.label}: {'found' if result.found else 'none'}")
    return result


def has_dagger(P: Magmaish) -> bool:
    """Fast filter: stops at the first element without a candidate"""
    magma = as_magma(P)
    for a in range(magma.size):
        if not any(
            satisfies_left(magma, a, c) and satisfies_right(magma, a, c)
            for c in range(magma.size)
        ):
            return False
    return True


# ===== Axioms =====

def check_A3(P: Magmaish) -> ValidationReport:
    """If ab and bc are defined then (ab)c ≍ a(bc)"""
    magma = as_magma(P)
    table = magma.table
    report = ValidationReport(subject=f"A3 on {magma.label}")
    for a, b, ab in magma.defined_pairs():
        for c in range(magma.size):
            bc = table[b][c]
            if bc is None:
                continue
            left = table[ab][c]
            right = table[a][bc]
            if left != right:
                report.add(
                    "A3",
                    [magma.names[a], magma.names[b], magma.names[c]],
                    f"(ab)c = {magma.show(left)}",
                    f"a(bc) = {magma.show(right)}",
                )
    return report


def check_I2(P: Magmaish, dagger: Sequence[int]) -> ValidationReport:
    """aa† = 1 = a†a for every a"""
    magma = as_magma(P)
    report = ValidationReport(subject=f"I2 on {magma.label}")
    if len(dagger) != magma.size:
        raise StructuralError(f"Dagger has {len(dagger)} entries for {magma.size} elements")
    one = magma.unit
    for a in range(magma.size):
        d = dagger[a]
        right = magma.product(a, d)
        left = magma.product(d, a)
        if right != one:
            report.add("I2.right", [magma.names[a], magma.names[d]], magma.names[one], magma.show(right))
        if left != one:
            report.add("I2.left", [magma.names[d], magma.names[a]], magma.names[one], magma.show(left))
    return report


def check_anti_automorphism(G: BinaryPartialGroup) -> ValidationReport:
    """(a†)† = a, and (ab)† ≍ b†a† in both directions"""
    report = ValidationReport(subject=f"anti-automorphism on {G.label}")
    d = G.dagger
    for a in range(G.size):
        if d[d[a]] != a:
            report.add("dagger.involution", [G.names[a]], G.names[a], G.names[d[d[a]]])
    for a in range(G.size):
        for b in range(G.size):
            ab = G.product(a, b)
            reversed_product = G.product(d[b], d[a])
            expected = None if ab is None else d[ab]
            if expected != reversed_product:
                report.add(
                    "dagger.anti",
                    [G.names[a], G.names[b]],
                    f"(ab)† = {G.show(expected)}",
                    f"b†a† = {G.show(reversed_product)}",
                )
    return report


def has_right_inverses(P: Magmaish) -> bool:
    magma = as_magma(P)
    return all(
        any(magma.product(a, r) == magma.unit for r in range(magma.size))
        for a in range(magma.size)
    )


def check_baer_criterion(P: Magmaish) -> ValidationReport:
    """
    A3 plus right inverses implies a dagger exists.

    Structures outside the hypothesis pass vacuously.
    """
    magma = as_magma(P)
    report = ValidationReport(subject=f"Baer criterion on {magma.label}")
    if not check_A3(magma).passed or not has_right_inverses(magma):
        report.vacuous = True
        report.notes.append("hypothesis (A3 and right inverses) does not hold")
        return report
    search = find_dagger(magma)
    if not search.found:
        first = search.report.violations[0]
        report.add("baer", first.witness, "dagger exists", first.found)
    return report


def is_group(P: Magmaish) -> bool:
    """Total, associative, with a dagger"""
    magma = as_magma(P)
    if any(x is None for row in magma.table for x in row):
        return False
    return check_A3(magma).passed and has_dagger(magma)


# ===== Homomorphisms =====

@dataclass(frozen=True)
class MagmaHom:
    """A total function between element sets"""
    source: Magmaish
    target: Magmaish
    mapping: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(self.mapping))
        if len(self.mapping) != as_magma(self.source).size:
            raise StructuralError("Hom map is not total on the source")
        if any(not 0 <= x < as_magma(self.target).size for x in self.mapping):
            raise StructuralError(f"Hom map values out of range: {self.mapping}")


def respects_products(source: Magmaish, target: Magmaish, mapping: Sequence[int]) -> bool:
    src, tgt = as_magma(source), as_magma(target)
    for a, b, ab in src.defined_pairs():
        if tgt.table[mapping[a]][mapping[b]] != mapping[ab]:
            return False
    return True


def validate_hom(f: MagmaHom) -> ValidationReport:
    """
    f(ab) = f(a)f(b) whenever ab is defined.

    The consequences f(1) = 1 and f(a†) = f(a)† are reported under their
    own ids; the dagger check needs both sides to be binary partial groups.
    """
    src, tgt = as_magma(f.source), as_magma(f.target)
    report = ValidationReport(subject=f"hom {src.label} → {tgt.label}")
    m = f.mapping
    for a, b, ab in src.defined_pairs():
        image = tgt.table[m[a]][m[b]]
        if image != m[ab]:
            report.add(
                "hom.product",
                [src.names[a], src.names[b]],
                f"f(ab) = {tgt.names[m[ab]]}",
                f"f(a)f(b) = {tgt.show(image)}",
            )
    if m[src.unit] != tgt.unit:
        report.add("hom.unit", [src.names[src.unit]], tgt.names[tgt.unit], tgt.names[m[src.unit]])
    if isinstance(f.source, BinaryPartialGroup) and isinstance(f.target, BinaryPartialGroup):
        for a in range(src.size):
            lhs = m[f.source.dagger[a]]
            rhs = f.target.dagger[m[a]]
            if lhs != rhs:
                report.add("hom.dagger", [src.names[a]], f"f(a)† = {tgt.names[rhs]}", f"f(a†) = {tgt.names[lhs]}")
    return report


def identity_hom(P: Magmaish) -> MagmaHom:
    return MagmaHom(source=P, target=P, mapping=tuple(range(as_magma(P).size)))


def compose_homs(g: MagmaHom, f: MagmaHom) -> MagmaHom:
    """g ∘ f"""
    if as_magma(f.target) != as_magma(g.source):
        raise StructuralError("Homs are not composable")
    return MagmaHom(source=f.source, target=g.target, mapping=tuple(g.mapping[x] for x in f.mapping))


def all_homs(source: Magmaish, target: Magmaish) -> List[MagmaHom]:
    """Every product-respecting total function, in lexicographic order"""
    src, tgt = as_magma(source), as_magma(target)
    homs = []
    for mapping in cartesian(range(tgt.size), repeat=src.size):
        if respects_products(src, tgt, mapping):
            homs.append(MagmaHom(source=source, target=target, mapping=mapping))
    return homs
