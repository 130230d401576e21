"""Exact and approximate maximum vertex-weighted matching on general graphs."""

from vertexmatch.graph import (
    NONE,
    DimensionError,
    Graph,
    Matching,
    SortedGraph,
    WeightAssignment,
    build_sorted_graph,
    heaviest_unmatched_neighbor,
)
from vertexmatch.mem import (
    EdgeWeightedGraph,
    best_two_augmentation,
    gpa_mem,
    greedy_mem,
    mvm_to_mem,
    random_improve_mem,
    round_robin_improve_mem,
)
from vertexmatch.mvm import exact_mvm, half_mvm, two_thirds_mvm
from vertexmatch.oracle import (
    MatchStats,
    has_augmenting_path,
    oracle_mem,
    oracle_mvm,
    stats,
    verify_matching,
    weight_vector,
)
from vertexmatch.weights import WeightMode, generate_weights

__version__ = "0.1.0"

__all__ = [
    "NONE", "DimensionError", "Graph", "Matching", "SortedGraph", "WeightAssignment",
    "build_sorted_graph", "heaviest_unmatched_neighbor",
    "EdgeWeightedGraph", "best_two_augmentation", "gpa_mem", "greedy_mem", "mvm_to_mem",
    "random_improve_mem", "round_robin_improve_mem",
    "exact_mvm", "half_mvm", "two_thirds_mvm",
    "MatchStats", "has_augmenting_path", "oracle_mem", "oracle_mvm", "stats",
    "verify_matching", "weight_vector",
    "WeightMode", "generate_weights",
]
