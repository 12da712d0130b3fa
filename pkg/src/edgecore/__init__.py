"""Exact computations on minimal reductions and cores of edge ideals."""

from .algebra import GF, QQ, parse_field
from .graph import Graph, builtin_graph, classify, load_graph, parse_graph
from .ideal import edge_ideal, graded_piece, mu_power, power, product
from .reductions import (
    Family,
    ReductionCandidate,
    build_family,
    is_reduction,
    obstruction_check,
    random_candidate,
    reduction_number,
)

__all__ = [
    "GF", "QQ", "parse_field", "Graph", "builtin_graph", "classify", "load_graph", "parse_graph",
    "edge_ideal", "graded_piece", "mu_power", "power", "product", "Family", "ReductionCandidate",
    "build_family", "is_reduction", "obstruction_check", "random_candidate", "reduction_number",
]
