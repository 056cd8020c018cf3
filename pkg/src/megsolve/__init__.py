"""Monitoring edge-geodetic sets on restricted graph classes.

A vertex pair (a, b) monitors an edge e when every shortest a-b path
uses e.  The package computes minimum sets of vertices whose pairs
monitor all edges, exactly on several graph classes where the mandatory
vertices or the non-cut vertices are known to be optimal, and by brute
force elsewhere.
"""

from .errors import (EdgeListParseError, GenerationError, LimitExceededError,
                     MethodMismatchError, NotConnectedError, NotP4SparseError,
                     SelfLoopError)
from .generators import (CLASSES, GenSpec, gen_bipartite_permutation,
                         gen_bipartite_permutation_with_ordering,
                         gen_distance_hereditary, gen_p4_sparse,
                         gen_random_connected, gen_strongly_chordal, generate,
                         spider_graph)
from .graph_core import (INF, DistanceMatrix, Graph, all_pairs_distances,
                         articulation_points, bfs_distances, build_graph,
                         complement, connected_components, co_components,
                         format_edge_list, graph_from_edge_list,
                         induced_subgraph, is_connected, parse_edge_list,
                         read_graph_file, vertex_set)
from .monitoring import (SATURATION_CAP, Bounds, MegSetCheck, bounds,
                         is_mandatory, is_meg_set, mandatory_vertices,
                         monitors, monitors_by_counting,
                         shortest_path_counts)
from .oracle import (DEFAULT_VERTEX_LIMIT, OracleResult, all_min_meg_sets,
                     mandatory_bruteforce, min_meg_bruteforce)
from .recognizers import (BipPermResult, PruneSequence, PruneStep, SEO,
                          SpiderPartition, StrongOrdering, detect_spider,
                          is_simple, recognize_bipartite_permutation,
                          recognize_distance_hereditary, recognize_p4_sparse,
                          recognize_strongly_chordal,
                          strong_ordering_from_orders, verify_prune_sequence,
                          verify_seo, verify_spider_partition,
                          verify_strong_ordering)
from .solvers import (METHODS, MegResult, cut_vertices_via_strong_ordering,
                      ecc_le2_exists, solve, solve_by_cut_decomposition,
                      solve_cut_based, solve_mandatory_based,
                      solve_p4_structural)

__all__ = [
    "INF",
    "SATURATION_CAP",
    "DEFAULT_VERTEX_LIMIT",
    "CLASSES",
    "METHODS",
    "Graph",
    "DistanceMatrix",
    "Bounds",
    "MegSetCheck",
    "OracleResult",
    "MegResult",
    "GenSpec",
    "PruneStep",
    "PruneSequence",
    "SpiderPartition",
    "StrongOrdering",
    "BipPermResult",
    "SEO",
    "SelfLoopError",
    "EdgeListParseError",
    "NotConnectedError",
    "MethodMismatchError",
    "NotP4SparseError",
    "LimitExceededError",
    "GenerationError",
    "vertex_set",
    "build_graph",
    "bfs_distances",
    "all_pairs_distances",
    "is_connected",
    "connected_components",
    "articulation_points",
    "induced_subgraph",
    "complement",
    "co_components",
    "parse_edge_list",
    "graph_from_edge_list",
    "read_graph_file",
    "format_edge_list",
    "monitors",
    "shortest_path_counts",
    "monitors_by_counting",
    "is_meg_set",
    "is_mandatory",
    "mandatory_vertices",
    "bounds",
    "min_meg_bruteforce",
    "mandatory_bruteforce",
    "all_min_meg_sets",
    "recognize_distance_hereditary",
    "verify_prune_sequence",
    "recognize_p4_sparse",
    "detect_spider",
    "verify_spider_partition",
    "recognize_bipartite_permutation",
    "strong_ordering_from_orders",
    "verify_strong_ordering",
    "recognize_strongly_chordal",
    "is_simple",
    "verify_seo",
    "solve",
    "solve_cut_based",
    "solve_mandatory_based",
    "solve_p4_structural",
    "solve_by_cut_decomposition",
    "cut_vertices_via_strong_ordering",
    "ecc_le2_exists",
    "gen_distance_hereditary",
    "gen_p4_sparse",
    "gen_bipartite_permutation",
    "gen_bipartite_permutation_with_ordering",
    "gen_strongly_chordal",
    "gen_random_connected",
    "spider_graph",
    "generate",
]
