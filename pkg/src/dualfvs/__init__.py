"""Dual and multi feedback vertex set solvers and enumerators for edge-colored graphs."""

from .compact import CompactRepresentation, enumerate_fvs_compact_reps, enumerate_minimal_fvs, represented_solutions
from .cover import (
    CoverGraph,
    build_cover_graph,
    enumerate_minimal_covers,
    max_matching,
    min_edge_cover,
    min_hitting_from_reps,
)
from .approx import fvs_2approx
from .dfvs import (
    enumerate_dfvs_algoA,
    enumerate_disjoint_dfvs,
    enumerate_minimal_dfvs,
    solve_dfvs,
)
from .formats import decode_instance, encode_instance
from .generate import GeneratorConfig, generate_instance
from .graph import BLUE, RED, Digraph, Edge, EdgeColoredGraph, digraph_to_alternating
from .mfvs import (
    DominationGraph,
    build_domination_graph,
    dominating_set_at_most,
    enumerate_minimal_mfvs,
    extract_mfvs_from_dominating,
    solve_mfvs,
)
from .reductions import Infeasible, ReducedInstance, apply_basic_rules, apply_path_rules, reduce_instance
from .verify import verify_solution

__all__ = [
    "BLUE",
    "RED",
    "CompactRepresentation",
    "CoverGraph",
    "Digraph",
    "DominationGraph",
    "Edge",
    "EdgeColoredGraph",
    "GeneratorConfig",
    "Infeasible",
    "ReducedInstance",
    "apply_basic_rules",
    "apply_path_rules",
    "build_cover_graph",
    "build_domination_graph",
    "decode_instance",
    "digraph_to_alternating",
    "dominating_set_at_most",
    "encode_instance",
    "enumerate_dfvs_algoA",
    "enumerate_disjoint_dfvs",
    "enumerate_fvs_compact_reps",
    "enumerate_minimal_covers",
    "enumerate_minimal_dfvs",
    "enumerate_minimal_fvs",
    "enumerate_minimal_mfvs",
    "extract_mfvs_from_dominating",
    "fvs_2approx",
    "generate_instance",
    "max_matching",
    "min_edge_cover",
    "min_hitting_from_reps",
    "reduce_instance",
    "represented_solutions",
    "solve_dfvs",
    "solve_mfvs",
    "verify_solution",
]
