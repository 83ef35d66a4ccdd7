"""Certifying recognition of Robinsonian similarity matrices.

Given a symmetric matrix over exact rational values, `certify` returns
either a Robinson ordering or a weighted asteroidal triple whose
witnessing paths can be checked independently.  Companion tools
enumerate all WATs, recognize unit interval graphs with typed
obstructions, and explore maximal Robinsonian submatrices.
"""

from .values import EntryValue, from_rational, transformed
from .matrix import (SymMatrix, Ordering, is_robinson_triple,
                     verify_robinson_ordering, permute, restrict)
from .avoidance import (Path, AvoidanceGraph, build_avoidance_graph,
                        avoids_path_exists, find_avoiding_path, is_critical)
from .certificates import (WeightedAsteroidalTriple, RobinsonOrdering,
                           NotRobinsonian, Certificate, verify_wat, make_wat)
from .decomposition import (CriticalElement, StronglyHomogeneousSet,
                            is_strongly_homogeneous, contract,
                            merge_orderings, critical_or_homogeneous)
from .layers import (LayerStructure, similarity_layers, wat_from_noncover,
                     check_layer_stars)
from .certify import certify, certify_with_critical
from .watenum import (TripleCounter, dense_ranks, triple_counter,
                      wat_triples, enumerate_wats, count_wats, find_one_wat)
from .uig import (Graph, Claw, ChordlessCycle, AsteroidalTriple,
                  GraphObstruction, adjacency_matrix,
                  verify_graph_obstruction, find_graph_obstruction,
                  obstruction_to_wat, wat_to_obstruction, is_unit_interval)
from .submatrix import (SubsetFamilies, is_maximal_robinsonian,
                        is_minimal_wa_cycle, enumerate_families,
                        greedy_robinsonian_core)
from .oracle import OracleVerdict, brute_force_certify
from .generators import (robinson_matrix, perturbed_matrix, random_matrix,
                         named_graph)
from ._kernels import BACKEND as kernel_backend

__version__ = "0.1.0"

__all__ = [
    "EntryValue", "from_rational", "transformed",
    "SymMatrix", "Ordering", "is_robinson_triple",
    "verify_robinson_ordering", "permute", "restrict",
    "Path", "AvoidanceGraph", "build_avoidance_graph",
    "avoids_path_exists", "find_avoiding_path", "is_critical",
    "WeightedAsteroidalTriple", "RobinsonOrdering", "NotRobinsonian",
    "Certificate", "verify_wat", "make_wat",
    "CriticalElement", "StronglyHomogeneousSet", "is_strongly_homogeneous",
    "contract", "merge_orderings", "critical_or_homogeneous",
    "LayerStructure", "similarity_layers", "wat_from_noncover",
    "check_layer_stars",
    "certify", "certify_with_critical",
    "TripleCounter", "dense_ranks", "triple_counter", "wat_triples",
    "enumerate_wats", "count_wats", "find_one_wat",
    "Graph", "Claw", "ChordlessCycle", "AsteroidalTriple",
    "GraphObstruction", "adjacency_matrix", "verify_graph_obstruction",
    "find_graph_obstruction", "obstruction_to_wat", "wat_to_obstruction",
    "is_unit_interval",
    "SubsetFamilies", "is_maximal_robinsonian", "is_minimal_wa_cycle",
    "enumerate_families", "greedy_robinsonian_core",
    "OracleVerdict", "brute_force_certify",
    "robinson_matrix", "perturbed_matrix", "random_matrix", "named_graph",
    "kernel_backend",
]
