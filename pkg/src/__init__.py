"""
Partial Group Lab

Finite binary partial groups, their embeddings into truncated symmetric
sets, and exhaustive checks on small instances.
"""

__version__ = "0.1.0"

from src.algebra.magma import BinaryPartialGroup, PartialMagma
from src.simplicial.functors import big_embed, small_embed, underlying_T
from src.simplicial.symset import TruncatedPartialGroup

__all__ = [
    "BinaryPartialGroup",
    "PartialMagma",
    "TruncatedPartialGroup",
    "big_embed",
    "small_embed",
    "underlying_T",
]
