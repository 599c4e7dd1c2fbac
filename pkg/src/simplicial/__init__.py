"""Truncated symmetric sets and the functors B, B′ and T"""

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
    skeleton,
    small_embed,
    underlying_T,
)
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

__all__ = [
    "big_embed",
    "check_2skeletal_equivalence",
    "check_bp_partial_group",
    "check_final_remark",
    "check_fully_faithful",
    "check_inversion_closure",
    "check_main_theorem",
    "check_simplicial_two_skeleton",
    "check_skeleta",
    "check_t_skeleton_invariance",
    "check_tb_identity",
    "check_triangle_identities",
    "check_unit_eta",
    "group_nerve",
    "induced_hom_B",
    "skeleton",
    "small_embed",
    "underlying_T",
    "SimplexMap",
    "SymSetHom",
    "TruncatedPartialGroup",
    "act",
    "check_contraction_orders",
    "degeneracy",
    "edge",
    "face",
    "total_product",
    "validate_partial_group",
    "validate_symset_hom",
]
