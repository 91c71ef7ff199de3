"""Quaternion unit gain graphs with exact rank and a girth-rank bound checker."""
from .gain_graph import (GainGraph, GraphError, adjacency_matrix, cycle_gain,
                         cycle_gain_is_real, cycle_gain_real_part, gain_of,
                         normalize_to_spanning_tree, switch, walk_gain)
from .graph_metrics import (all_cycles_up_to, bipartition, find_induced_cycle_of_girth, girth,
                            is_complete_bipartite, is_connected)
from .kernel import BACKEND
from .qlinalg import (QMatrix, RankMethod, RankResult, conjugate_transpose, is_hermitian,
                      principal_submatrix, rank_adjoint, rank_exact)
from .quaternion import (I, J, K, ONE, Q8, Quaternion, UnitQuaternion, conjugate, inverse,
                         multiply, norm_squared, rational_unit_from_vector)
from .theorem import (EnumerationSummary, EqualityCase, Q8Exhaustive, Q8Sampled,
                      RationalUnitSampled, TheoremReport, check_theorem, enumerate_and_check)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "EnumerationSummary",
    "EqualityCase",
    "GainGraph",
    "GraphError",
    "I",
    "J",
    "K",
    "ONE",
    "Q8",
    "Q8Exhaustive",
    "Q8Sampled",
    "QMatrix",
    "Quaternion",
    "RankMethod",
    "RankResult",
    "RationalUnitSampled",
    "TheoremReport",
    "UnitQuaternion",
    "adjacency_matrix",
    "all_cycles_up_to",
    "bipartition",
    "check_theorem",
    "conjugate",
    "conjugate_transpose",
    "cycle_gain",
    "cycle_gain_is_real",
    "cycle_gain_real_part",
    "enumerate_and_check",
    "find_induced_cycle_of_girth",
    "gain_of",
    "girth",
    "inverse",
    "is_complete_bipartite",
    "is_connected",
    "is_hermitian",
    "multiply",
    "norm_squared",
    "normalize_to_spanning_tree",
    "principal_submatrix",
    "rank_adjoint",
    "rank_exact",
    "rational_unit_from_vector",
    "switch",
    "walk_gain",
    "__version__",
]
