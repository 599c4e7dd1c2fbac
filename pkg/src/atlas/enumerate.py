"""
Brute-force oracle over small unital partial magmas.

The unit sits at index 0 with its row and column filled in, so a k-element
table has (k-1)^2 free cells, each ranging over undefined or an element.
Work is partitioned by the value of the first free cell.
"""

from dataclasses import dataclass, field
from itertools import permutations
from itertools import product as cartesian
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher
from loguru import logger
from pydantic import BaseModel, Field

from src.algebra.magma import (
    BinaryPartialGroup,
    Magmaish,
    PartialMagma,
    Table,
    as_magma,
    check_A3,
    check_baer_criterion,
    check_I2,
    default_names,
    find_dagger,
    has_dagger,
)
from src.core.config import get_settings
from src.core.exceptions import ResourceGuardError, UnknownPredicateError
from src.core.reports import ValidationReport, Verdict
from src.core.sweep import run_sweep
from src.simplicial.functors import big_embed, check_fully_faithful, levels_differ, skeleton

Prefix = Tuple[Optional[int], ...]

WITNESS_PREDICATES = (
    "violates-A3",
    "violates-I2",
    "b-neq-b-prime",
    "hom-count-mismatch",
    "dagger-non-unique",
)


def candidate_count(k: int) -> int:
    """(k+1)^((k-1)^2)"""
    return (k + 1) ** ((k - 1) ** 2)


def _check_size(k: int, allow_large: Optional[bool]) -> None:
    settings = get_settings()
    allow_large = settings.verification.unsafe_large if allow_large is None else allow_large
    limit = settings.enumeration.unsafe_max_size if allow_large else settings.enumeration.max_size
    if not 1 <= k <= limit:
        hint = "" if allow_large or k > settings.enumeration.unsafe_max_size else "; enable unsafe_large"
        raise ResourceGuardError(f"Size {k} outside 1..{limit}{hint}")


def _choices(k: int) -> Tuple[Optional[int], ...]:
    return (None,) + tuple(range(k))


def partitions(k: int) -> List[Prefix]:
    """One prefix per value of the first free cell; k = 1 has none"""
    if k == 1:
        return [()]
    return [(value,) for value in _choices(k)]


def _tables(k: int, prefix: Prefix = ()) -> Iterator[Table]:
    """Raw tables, free cells in row-major order, each over undefined then 0..k-1"""
    cells = [(a, b) for a in range(1, k) for b in range(1, k)]
    rows = [[None] * k for _ in range(k)]
    for a in range(k):
        rows[0][a] = a
        rows[a][0] = a
    for values in cartesian(_choices(k), repeat=len(cells) - len(prefix)):
        for (a, b), value in zip(cells, prefix + values):
            rows[a][b] = value
        yield tuple(tuple(row) for row in rows)


def _unit_in_every_line(table: Table, columns: bool = True) -> bool:
    """Every row, and with ``columns`` every column, contains the unit"""
    k = len(table)
    if not all(0 in row for row in table):
        return False
    return not columns or all(any(table[a][b] == 0 for a in range(k)) for b in range(k))


def enumerate_unital_partial_magmas(
    k: int,
    allow_large: Optional[bool] = None,
    prefix: Prefix = (),
) -> Iterator[PartialMagma]:
    """
    Every k-element table satisfying the unit laws, unit at index 0.

    Raises:
        ResourceGuardError: k outside the configured range
    """
    _check_size(k, allow_large)
    names = default_names(k)
    for table in _tables(k, prefix):
        yield PartialMagma(names=names, unit=0, table=table)


# ===== Isomorphism =====

def canonical_form(P: Magmaish) -> PartialMagma:
    """
    The relabeling with the lexicographically least encoding among all
    bijections fixing the unit. Names become 1, a, b, ...
    """
    magma = as_magma(P)
    if magma.unit != 0:
        order = [magma.unit] + [i for i in range(magma.size) if i != magma.unit]
        perm = [0] * magma.size
        for new, old in enumerate(order):
            perm[old] = new
        magma = magma.relabel(perm)
    names = default_names(magma.size)
    best: Optional[PartialMagma] = None
    for rest in permutations(range(1, magma.size)):
        candidate = magma.relabel((0,) + rest, names=names)
        if best is None or candidate.encoding() < best.encoding():
            best = candidate
    return best


def _structure_graph(P: PartialMagma) -> nx.DiGraph:
    """Element nodes plus one node per defined product, edges labelled by role"""
    graph = nx.DiGraph()
    for a in range(P.size):
        graph.add_node(("e", a), kind="unit" if a == P.unit else "element")
    for a, b, ab in P.defined_pairs():
        node = ("p", a, b)
        graph.add_node(node, kind="product")
        if a == b:
            graph.add_edge(("e", a), node, roles=frozenset({"left", "right"}))
        else:
            graph.add_edge(("e", a), node, roles=frozenset({"left"}))
            graph.add_edge(("e", b), node, roles=frozenset({"right"}))
        graph.add_edge(node, ("e", ab), roles=frozenset({"result"}))
    return graph


def isomorphic(P: Magmaish, Q: Magmaish) -> Optional[Tuple[int, ...]]:
    """
    A unit-preserving bijection ``f`` with f(ab) = f(a)f(b) and matching
    definedness, as ``f[i]`` for each index of P; None when none exists.
    """
    p, q = as_magma(P), as_magma(Q)
    if p.size != q.size:
        return None
    if sum(1 for _ in p.defined_pairs()) != sum(1 for _ in q.defined_pairs()):
        return None
    matcher = DiGraphMatcher(
        _structure_graph(p),
        _structure_graph(q),
        node_match=lambda x, y: x["kind"] == y["kind"],
        edge_match=lambda x, y: x["roles"] == y["roles"],
    )
    if not matcher.is_isomorphic():
        return None
    mapping = [0] * p.size
    for source, target in matcher.mapping.items():
        if source[0] == "e":
            mapping[source[1]] = target[1]
    return tuple(mapping)


# ===== Classification =====

class AtlasProvenance(BaseModel):
    """How an atlas was produced"""

    size: int
    candidates: int = Field(..., description="Unital tables examined")
    with_dagger: int = Field(..., description="Tables admitting a dagger, before dedup")
    classes: int = Field(..., description="Isomorphism classes")
    partitions: int
    workers: int


@dataclass
class Atlas:
    """Binary partial groups of one size up to isomorphism, in canonical order"""

    size: int
    structures: List[BinaryPartialGroup]
    provenance: AtlasProvenance

    def __len__(self) -> int:
        return len(self.structures)

    def __iter__(self) -> Iterator[BinaryPartialGroup]:
        return iter(self.structures)


@dataclass
class _PartitionResult:
    examined: int = 0
    with_dagger: int = 0
    classes: Dict[Tuple[int, ...], Table] = field(default_factory=dict)


def _classify_partition(task: Tuple[int, Prefix]) -> _PartitionResult:
    k, prefix = task
    result = _PartitionResult()
    names = default_names(k)
    for table in _tables(k, prefix):
        result.examined += 1
        if not _unit_in_every_line(table):
            continue
        magma = PartialMagma(names=names, unit=0, table=table)
        if not has_dagger(magma):
            continue
        result.with_dagger += 1
        canonical = canonical_form(magma)
        result.classes.setdefault(canonical.encoding(), canonical.table)
    return result


def classify_bpgs(k: int, workers: Optional[int] = None, allow_large: Optional[bool] = None) -> Atlas:
    """Filter by dagger existence, deduplicate by canonical form"""
    _check_size(k, allow_large)
    workers = workers if workers is not None else get_settings().enumeration.workers
    tasks = [(k, prefix) for prefix in partitions(k)]
    logger.info(f"Classifying size {k}: {candidate_count(k)} candidates in {len(tasks)} partitions")
    results = run_sweep(_classify_partition, tasks, workers)

    classes: Dict[Tuple[int, ...], Table] = {}
    for result in results:
        for encoding, table in result.classes.items():
            classes.setdefault(encoding, table)
    names = default_names(k)
    structures = [
        BinaryPartialGroup.from_magma(
            PartialMagma(names=names, unit=0, table=classes[encoding], label=f"G{k}.{i}")
        )
        for i, encoding in enumerate(sorted(classes), start=1)
    ]
    provenance = AtlasProvenance(
        size=k,
        candidates=sum(r.examined for r in results),
        with_dagger=sum(r.with_dagger for r in results),
        classes=len(structures),
        partitions=len(tasks),
        workers=workers,
    )
    logger.info(f"Size {k}: {provenance.classes} classes from {provenance.with_dagger} tables with a dagger")
    return Atlas(size=k, structures=structures, provenance=provenance)


def build_atlas(max_size: Optional[int] = None, workers: Optional[int] = None) -> Dict[int, Atlas]:
    """Atlases for every size from 1 to ``max_size``"""
    max_size = max_size if max_size is not None else get_settings().enumeration.max_size
    return {k: classify_bpgs(k, workers) for k in range(1, max_size + 1)}


# ===== Sweeps over raw tables =====

def _baer_partition(task: Tuple[int, Prefix]) -> Tuple[int, ValidationReport]:
    k, prefix = task
    report = ValidationReport(subject=f"Baer criterion over size {k}")
    names = default_names(k)
    hypothesis = 0
    for table in _tables(k, prefix):
        if not _unit_in_every_line(table, columns=False):
            continue
        magma = PartialMagma(names=names, unit=0, table=table)
        single = check_baer_criterion(magma)
        if single.vacuous:
            continue
        hypothesis += 1
        for violation in single.violations:
            violation.witness = [str(table)] + violation.witness
        report.merge(single)
    return hypothesis, report


def sweep_baer_criterion(k: int, workers: Optional[int] = None) -> ValidationReport:
    """Every table satisfying A3 with right inverses admits a dagger"""
    _check_size(k, None)
    results = run_sweep(_baer_partition, [(k, p) for p in partitions(k)], workers)
    report = ValidationReport(subject=f"Baer criterion over size {k}")
    for _, partial in results:
        report.violations.extend(partial.violations)
    in_scope = sum(count for count, _ in results)
    report.notes.append(f"{in_scope} of {candidate_count(k)} tables satisfy A3 with right inverses")
    report.vacuous = in_scope == 0
    return report


def _non_unique_partition(task: Tuple[int, Prefix]) -> Tuple[int, Optional[Table]]:
    k, prefix = task
    names = default_names(k)
    examined = 0
    for table in _tables(k, prefix):
        examined += 1
        if not _unit_in_every_line(table):
            continue
        search = find_dagger(PartialMagma(names=names, unit=0, table=table))
        if any(v.axiom == "dagger.non-unique" for v in search.report.violations):
            return examined, table
    return examined, None


# ===== Witness search =====

class WitnessResult(BaseModel):
    """Outcome of a witness search; absence is reported with the range searched"""

    predicate: str
    found: bool
    label: Optional[str] = None
    structure: Optional[Dict] = None
    detail: Optional[str] = None
    searched_sizes: List[int] = Field(default_factory=list)
    examined: int = 0


def _atlas_predicate(predicate: str, levels: int) -> Callable[[BinaryPartialGroup], Optional[str]]:
    def violates_a3(G: BinaryPartialGroup) -> Optional[str]:
        report = check_A3(G)
        return None if report.passed else report.violations[0].describe()

    def violates_i2(G: BinaryPartialGroup) -> Optional[str]:
        report = check_I2(G, G.dagger)
        return None if report.passed else report.violations[0].describe()

    def b_neq_b_prime(G: BinaryPartialGroup) -> Optional[str]:
        B = big_embed(G, levels)
        difference = levels_differ(skeleton(B, 2), B)
        if difference is None:
            return None
        n, w = difference
        return f"{B.show(w)} ∈ B_{n} \\ B′_{n}"

    return {
        "violates-A3": violates_a3,
        "violates-I2": violates_i2,
        "b-neq-b-prime": b_neq_b_prime,
    }[predicate]


def find_witness(
    max_size: int,
    predicate: str,
    levels: Optional[int] = None,
    workers: Optional[int] = None,
) -> WitnessResult:
    """
    First structure, by size and then canonical order, satisfying
    ``predicate``; sizes are searched upward from 1.

    Raises:
        UnknownPredicateError: predicate outside WITNESS_PREDICATES
    """
    if predicate not in WITNESS_PREDICATES:
        raise UnknownPredicateError(
            f"Unknown predicate {predicate!r}; expected one of {', '.join(WITNESS_PREDICATES)}"
        )
    levels = levels if levels is not None else get_settings().verification.levels
    result = WitnessResult(predicate=predicate, found=False)

    if predicate == "dagger-non-unique":
        for k in range(1, max_size + 1):
            _check_size(k, None)
            result.searched_sizes.append(k)
            for examined, table in run_sweep(_non_unique_partition, [(k, p) for p in partitions(k)], workers):
                result.examined += examined
                if table is not None and not result.found:
                    magma = PartialMagma(names=default_names(k), unit=0, table=table, label=f"M{k}")
                    result.found = True
                    result.label = magma.label
                    result.structure = magma.to_document()
                    result.detail = find_dagger(magma).report.violations[0].describe()
            if result.found:
                return result
        return result

    if predicate == "hom-count-mismatch":
        structures: List[BinaryPartialGroup] = []
        for k in range(1, max_size + 1):
            structures.extend(classify_bpgs(k, workers).structures)
            result.searched_sizes.append(k)
        for G in structures:
            for H in structures:
                result.examined += 1
                report = check_fully_faithful(G, H, levels)
                if not report.passed:
                    failed = next(c for c in report.checks if c.verdict == Verdict.FAIL)
                    result.found = True
                    result.label = f"{G.label} → {H.label}"
                    result.structure = G.magma.to_document()
                    result.detail = f"{failed.claim}: {failed.witness}"
                    return result
        return result

    test = _atlas_predicate(predicate, levels)
    for k in range(1, max_size + 1):
        atlas = classify_bpgs(k, workers)
        result.searched_sizes.append(k)
        for G in atlas:
            result.examined += 1
            detail = test(G)
            if detail is not None:
                result.found = True
                result.label = G.label
                result.structure = G.magma.to_document()
                result.detail = detail
                return result
    logger.info(f"No witness for {predicate} through size {max_size} ({result.examined} structures)")
    return result


def check_isomorphism_laws(structures: Sequence[Magmaish]) -> ValidationReport:
    """Reflexivity, symmetry and transitivity of ``isomorphic`` on the given structures"""
    report = ValidationReport(subject="isomorphism is an equivalence")
    items = list(structures)
    for P in items:
        if isomorphic(P, P) is None:
            report.add("iso.reflexive", [as_magma(P).label])
    for P in items:
        for Q in items:
            if (isomorphic(P, Q) is None) != (isomorphic(Q, P) is None):
                report.add("iso.symmetric", [as_magma(P).label, as_magma(Q).label])
    for P in items:
        for Q in items:
            if isomorphic(P, Q) is None:
                continue
            for R in items:
                if isomorphic(Q, R) is not None and isomorphic(P, R) is None:
                    report.add("iso.transitive", [as_magma(P).label, as_magma(Q).label, as_magma(R).label])
    return report
