"""Partial magmas, binary partial groups and words over them"""

from src.algebra.magma import (
    BinaryPartialGroup,
    DaggerSearch,
    MagmaDocument,
    MagmaHom,
    PartialMagma,
    all_homs,
    check_A3,
    check_anti_automorphism,
    check_baer_criterion,
    check_I2,
    compose_homs,
    dagger_candidates,
    find_dagger,
    identity_hom,
    is_group,
    one_sided_candidates,
    validate_hom,
    validate_unital,
)
from src.algebra.words import (
    ParenTree,
    Word,
    all_parenthesizations,
    bp_diagnose,
    bp_membership,
    check_mirror_identity,
    evaluate,
    mirror,
    word_dagger,
)

__all__ = [
    "BinaryPartialGroup",
    "DaggerSearch",
    "MagmaDocument",
    "MagmaHom",
    "PartialMagma",
    "all_homs",
    "check_A3",
    "check_anti_automorphism",
    "check_baer_criterion",
    "check_I2",
    "compose_homs",
    "dagger_candidates",
    "find_dagger",
    "identity_hom",
    "is_group",
    "one_sided_candidates",
    "validate_hom",
    "validate_unital",
    "ParenTree",
    "Word",
    "all_parenthesizations",
    "bp_diagnose",
    "bp_membership",
    "check_mirror_identity",
    "evaluate",
    "mirror",
    "word_dagger",
]
