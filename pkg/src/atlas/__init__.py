"""Exhaustive enumeration of small binary partial groups"""

from src.atlas.enumerate import (
    WITNESS_PREDICATES,
    Atlas,
    AtlasProvenance,
    WitnessResult,
    build_atlas,
    candidate_count,
    canonical_form,
    classify_bpgs,
    enumerate_unital_partial_magmas,
    find_witness,
    isomorphic,
    sweep_baer_criterion,
)
from src.atlas.persistence import AtlasManifest, load_atlas, load_manifest, save_atlas

__all__ = [
    "WITNESS_PREDICATES",
    "Atlas",
    "AtlasProvenance",
    "WitnessResult",
    "build_atlas",
    "candidate_count",
    "canonical_form",
    "classify_bpgs",
    "enumerate_unital_partial_magmas",
    "find_witness",
    "isomorphic",
    "sweep_baer_criterion",
    "AtlasManifest",
    "load_atlas",
    "load_manifest",
    "save_atlas",
]
