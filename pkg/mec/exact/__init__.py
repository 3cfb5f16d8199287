"""Exact minimum-entropy couplings of two distributions."""

from mec.exact.backtrack import BacktrackSolver, backtrack_exact
from mec.exact.base import BaseSolver, SolveResult
from mec.exact.dp import DPSolver, dp_exact
from mec.exact.enumeration import EnumerationSolver, vertex_enum_exact
from mec.exact.forest import BipartiteForest, ForestCheck, check_forest_leaf_property
from mec.exact.registry import SolverRegistry, get_registry

__all__ = [
    "BacktrackSolver",
    "BaseSolver",
    "BipartiteForest",
    "DPSolver",
    "EnumerationSolver",
    "ForestCheck",
    "SolveResult",
    "SolverRegistry",
    "backtrack_exact",
    "check_forest_leaf_property",
    "dp_exact",
    "get_registry",
    "vertex_enum_exact",
]
