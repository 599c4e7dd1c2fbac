"""
Full parenthesizations of words and membership in the levels of BP.

A word is a tuple of element indices. A ParenTree is a full binary tree;
applied to a word of the same length it names one iterated product.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product as cartesian
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from src.algebra.magma import BinaryPartialGroup, Magmaish, as_magma
from src.core.config import get_settings
from src.core.exceptions import ResourceGuardError, StructuralError
from src.core.reports import ValidationReport

Word = Tuple[int, ...]

LEAF_SYMBOL = "•"


@dataclass(frozen=True)
class ParenTree:
    """
    A full binary tree; a leaf has neither child.

    Text form is a balanced bracket string over •, e.g. ``(•(••))``.
    """

    left: Optional["ParenTree"] = None
    right: Optional["ParenTree"] = None

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise StructuralError("A tree node needs both children or none")

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @cached_property
    def leaves(self) -> int:
        if self.is_leaf:
            return 1
        return self.left.leaves + self.right.leaves

    def __str__(self) -> str:
        if self.is_leaf:
            return LEAF_SYMBOL
        return f"({self.left}{self.right})"

    @classmethod
    def parse(cls, text: str) -> "ParenTree":
        """Inverse of ``str``"""
        text = text.strip()

        def go(pos: int) -> Tuple["ParenTree", int]:
            if pos >= len(text):
                raise StructuralError(f"Unexpected end of tree text {text!r}")
            if text[pos] == LEAF_SYMBOL:
                return LEAF, pos + 1
            if text[pos] != "(":
                raise StructuralError(f"Unexpected {text[pos]!r} at {pos} in {text!r}")
            left, pos = go(pos + 1)
            right, pos = go(pos)
            if pos >= len(text) or text[pos] != ")":
                raise StructuralError(f"Expected ')' at {pos} in {text!r}")
            return cls(left, right), pos + 1

        tree, end = go(0)
        if end != len(text):
            raise StructuralError(f"Trailing characters in tree text {text!r}")
        return tree

    @classmethod
    def from_expression(cls, text: str) -> Tuple["ParenTree", List[str]]:
        """
        Parse a parenthesized product of single letters such as ``a(b(cd))``.

        Returns the tree and the letters in left-to-right order. Juxtaposed
        factors must come in twos at every level.
        """
        letters: List[str] = []
        text = text.replace(" ", "")

        def factors(pos: int) -> Tuple[List["ParenTree"], int]:
            items: List[ParenTree] = []
            while pos < len(text) and text[pos] != ")":
                if text[pos] == "(":
                    inner, pos = factors(pos + 1)
                    if pos >= len(text) or text[pos] != ")":
                        raise StructuralError(f"Unbalanced expression {text!r}")
                    pos += 1
                    items.append(combine(inner))
                else:
                    letters.append(text[pos])
                    items.append(LEAF)
                    pos += 1
            return items, pos

        def combine(items: List["ParenTree"]) -> "ParenTree":
            if len(items) == 1:
                return items[0]
            if len(items) == 2:
                return cls(items[0], items[1])
            raise StructuralError(f"Ambiguous product of {len(items)} factors in {text!r}")

        items, end = factors(0)
        if end != len(text):
            raise StructuralError(f"Unbalanced expression {text!r}")
        return combine(items), letters

    def to_expression(self, letters: Sequence[str]) -> str:
        """E.g. ``((ab)c)d``; the outermost product is left unbracketed"""
        if len(letters) != self.leaves:
            raise StructuralError(f"{len(letters)} letters for a tree with {self.leaves} leaves")
        it = iter(letters)

        def go(tree: "ParenTree", top: bool) -> str:
            if tree.is_leaf:
                return next(it)
            inner = go(tree.left, False) + go(tree.right, False)
            return inner if top else f"({inner})"

        return go(self, True)


LEAF = ParenTree()


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _trees(n: int) -> Tuple[ParenTree, ...]:
    if n == 1:
        return (LEAF,)
    trees = []
    for split in range(1, n):
        for left in _trees(split):
            for right in _trees(n - split):
                trees.append(ParenTree(left, right))
    return tuple(trees)


def all_parenthesizations(n: int, bound: Optional[int] = None) -> List[ParenTree]:
    """
    Every full binary tree with ``n`` leaves, Catalan(n-1) of them.

    Ordered by split position, leftmost split first, recursively.

    Raises:
        ResourceGuardError: n exceeds the configured leaf bound
    """
    bound = bound if bound is not None else get_settings().verification.max_tree_leaves
    if n < 1:
        raise StructuralError(f"A tree needs at least one leaf, got {n}")
    if n > bound:
        raise ResourceGuardError(f"{n} leaves exceeds the tree bound {bound}")
    trees = list(_trees(n))
    logger.debug(f"{len(trees)} parenthesizations of {n} letters")
    return trees


def evaluate(P: Magmaish, w: Sequence[int], t: ParenTree) -> Optional[int]:
    """Multiply ``w`` as ``t`` prescribes; None if any product is undefined"""
    if len(w) != t.leaves:
        raise StructuralError(f"Word of length {len(w)} does not fit a tree with {t.leaves} leaves")
    table = as_magma(P).table
    position = 0

    def go(tree: ParenTree) -> Optional[int]:
        nonlocal position
        if tree.is_leaf:
            value = w[position]
            position += 1
            return value
        left = go(tree.left)
        right = go(tree.right)
        if left is None or right is None:
            return None
        return table[left][right]

    return go(t)


def mirror(t: ParenTree) -> ParenTree:
    """Left-right reflection"""
    if t.is_leaf:
        return t
    return ParenTree(mirror(t.right), mirror(t.left))


def word_dagger(P: BinaryPartialGroup, w: Sequence[int]) -> Word:
    """(a1, ..., an)† = (an†, ..., a1†)"""
    dagger = P.dagger
    return tuple(dagger[a] for a in reversed(w))


def _interval_outcomes(P: Magmaish, w: Sequence[int]) -> Dict[Optional[int], ParenTree]:
    """
    Every value the full parenthesizations of ``w`` produce, each with the
    first tree (in canonical order) producing it. None stands for undefined.
    """
    table = as_magma(P).table
    n = len(w)
    outcomes: Dict[Tuple[int, int], Dict[Optional[int], ParenTree]] = {
        (i, i + 1): {w[i]: LEAF} for i in range(n)
    }
    for length in range(2, n + 1):
        for i in range(0, n - length + 1):
            j = i + length
            found: Dict[Optional[int], ParenTree] = {}
            for split in range(i + 1, j):
                for lv, lt in outcomes[(i, split)].items():
                    for rv, rt in outcomes[(split, j)].items():
                        value = None if lv is None or rv is None else table[lv][rv]
                        if value not in found:
                            found[value] = ParenTree(lt, rt)
            outcomes[(i, j)] = found
    return outcomes[(0, n)]


def _check_word(P: Magmaish, w: Sequence[int], bound: Optional[int]) -> None:
    bound = bound if bound is not None else get_settings().verification.max_word_length
    if len(w) > bound:
        raise ResourceGuardError(f"Word length {len(w)} exceeds the bound {bound}")
    size = as_magma(P).size
    for a in w:
        if not 0 <= a < size:
            raise StructuralError(f"Word entry {a} out of range for {size} elements")


def bp_membership(P: Magmaish, w: Sequence[int], bound: Optional[int] = None) -> Optional[int]:
    """
    The total product of ``w`` if every full parenthesization is defined and
    all agree; otherwise None. The empty word gives the unit.
    """
    magma = as_magma(P)
    w = tuple(w)
    _check_word(magma, w, bound)
    key = ("bp", w)
    cached = magma._memo.get(key, ...)
    if cached is not ...:
        return cached

    if len(w) == 0:
        value = magma.unit
    elif len(w) == 1:
        value = w[0]
    elif len(w) == 2:
        value = magma.table[w[0]][w[1]]
    else:
        outcomes = _interval_outcomes(magma, w)
        value = next(iter(outcomes)) if len(outcomes) == 1 else None
    magma._memo[key] = value
    return value


@dataclass
class Membership:
    """Diagnostic form of ``bp_membership``"""
    word: Word
    value: Optional[int]
    undefined_tree: Optional[ParenTree] = None
    disagreement: Optional[Tuple[Tuple[ParenTree, int], Tuple[ParenTree, int]]] = None

    @property
    def member(self) -> bool:
        return self.value is not None


def bp_diagnose(P: Magmaish, w: Sequence[int], bound: Optional[int] = None) -> Membership:
    """Like ``bp_membership`` but names a tree showing why ``w`` is outside"""
    magma = as_magma(P)
    w = tuple(w)
    _check_word(magma, w, bound)
    if len(w) == 0:
        return Membership(word=w, value=magma.unit)
    outcomes = _interval_outcomes(magma, w)
    if None in outcomes:
        return Membership(word=w, value=None, undefined_tree=outcomes[None])
    if len(outcomes) > 1:
        (v1, t1), (v2, t2) = list(outcomes.items())[:2]
        return Membership(word=w, value=None, disagreement=((t1, v1), (t2, v2)))
    return Membership(word=w, value=next(iter(outcomes)))


def check_mirror_identity(P: BinaryPartialGroup, w: Sequence[int], t: ParenTree) -> ValidationReport:
    """evaluate(w, t) ≍ evaluate(w†, mirror t)†"""
    report = ValidationReport(subject=f"mirror identity on {P.label}")
    lhs = evaluate(P, w, t)
    inner = evaluate(P, word_dagger(P, w), mirror(t))
    rhs = None if inner is None else P.dagger[inner]
    if lhs != rhs:
        report.add(
            "mirror",
            [format_word(P, w), str(t)],
            f"μ(v) = {P.show(lhs)}",
            f"μ̄(v†)† = {P.show(rhs)}",
        )
    return report


def words_of_length(size: int, n: int) -> Iterator[Word]:
    return cartesian(range(size), repeat=n)


def parse_word(P: Magmaish, text: str) -> Word:
    """Comma-separated element names; the empty string is the empty word"""
    magma = as_magma(P)
    text = text.strip()
    if not text:
        return ()
    return tuple(magma.index_of(name.strip()) for name in text.split(","))


def format_word(P: Magmaish, w: Sequence[int]) -> str:
    names = as_magma(P).names
    return ",".join(names[a] for a in w)
