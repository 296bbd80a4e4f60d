"""Exhaustive search for extremal pattern-free graphs."""

from __future__ import annotations

from .engine import BOUNDS, ConflictGraph, EngineResult, run_search
from .extremal import (
    DEFAULT_LIMITS,
    InfeasibleError,
    Limits,
    Mode,
    Objective,
    SearchOutcome,
    SearchProblem,
    count_labeled_extremal,
    count_per_head_maximum,
    enumerate_extremal_classes,
    extremal_search,
    is_valid_witness,
)
from .multiedge import (
    MultiedgeProfile,
    PreconditionError,
    disjoint_tail_pair_check,
    multiedge_pair_check,
    multiedge_profile,
    saturate_multiedge,
)
from .undirected import StructureReport, check_intersection_structure, verify_structure_lemma

__all__ = [
    "BOUNDS",
    "ConflictGraph",
    "DEFAULT_LIMITS",
    "EngineResult",
    "InfeasibleError",
    "Limits",
    "Mode",
    "Objective",
    "SearchOutcome",
    "SearchProblem",
    "count_labeled_extremal",
    "count_per_head_maximum",
    "enumerate_extremal_classes",
    "extremal_search",
    "is_valid_witness",
    "run_search",
    "MultiedgeProfile",
    "PreconditionError",
    "StructureReport",
    "check_intersection_structure",
    "disjoint_tail_pair_check",
    "multiedge_pair_check",
    "multiedge_profile",
    "saturate_multiedge",
    "verify_structure_lemma",
]
