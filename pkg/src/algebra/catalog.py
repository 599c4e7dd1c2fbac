"""
Named small structures used throughout tests, examples and the CLI.
"""

from typing import Dict, Callable

from src.algebra.magma import BinaryPartialGroup, PartialMagma, default_names


def trivial_magma() -> PartialMagma:
    return PartialMagma.from_rows([[0]], names=["1"], label="trivial")


def trivial_group() -> BinaryPartialGroup:
    return BinaryPartialGroup.from_magma(trivial_magma())


def cyclic_magma(n: int) -> PartialMagma:
    """Z/n with 0 written as 1 and generator powers as a, b, ..."""
    rows = [[(i + j) % n for j in range(n)] for i in range(n)]
    return PartialMagma.from_rows(rows, names=default_names(n), label=f"Z/{n}")


def cyclic_group(n: int) -> BinaryPartialGroup:
    return BinaryPartialGroup.from_magma(cyclic_magma(n))


def klein_four_group() -> BinaryPartialGroup:
    rows = [[i ^ j for j in range(4)] for i in range(4)]
    return BinaryPartialGroup.from_magma(
        PartialMagma.from_rows(rows, names=["1", "a", "b", "c"], label="Z/2xZ/2")
    )


def p3_magma() -> PartialMagma:
    """
    Three elements 1, a, b with ab = ba = 1 and aa, bb undefined.

    The smallest binary partial group that is not a group.
    """
    return PartialMagma.from_rows(
        [
            [0, 1, 2],
            [1, None, 0],
            [2, 0, None],
        ],
        names=["1", "a", "b"],
        label="P3",
    )


def p3() -> BinaryPartialGroup:
    return BinaryPartialGroup.from_magma(p3_magma())


def z2_square_undefined() -> PartialMagma:
    """Two elements with aa undefined; admits no dagger"""
    return PartialMagma.from_rows([[0, 1], [1, None]], names=["1", "a"], label="Z2-aa-undefined")


def z2_square_idempotent() -> PartialMagma:
    """Two elements with aa = a; admits no dagger"""
    return PartialMagma.from_rows([[0, 1], [1, 1]], names=["1", "a"], label="Z2-aa-idempotent")


CATALOG: Dict[str, Callable[[], PartialMagma]] = {
    "trivial": trivial_magma,
    "Z2": lambda: cyclic_magma(2),
    "Z3": lambda: cyclic_magma(3),
    "Z4": lambda: cyclic_magma(4),
    "V4": lambda: klein_four_group().magma,
    "P3": p3_magma,
    "Z2-aa-undefined": z2_square_undefined,
    "Z2-aa-idempotent": z2_square_idempotent,
}
