"""Depth and associated primes of second powers of squarefree monomial ideals,
decided combinatorially and cross-checked against a brute-force oracle."""

from .complexes import DepthClass, MultiDegree, SimplicialComplex
from .hypergraph import Hypergraph, HypergraphError, graph, parse_text, to_text

__all__ = [
    "DepthClass",
    "Hypergraph",
    "HypergraphError",
    "MultiDegree",
    "SimplicialComplex",
    "graph",
    "parse_text",
    "to_text",
]
__version__ = "0.1.0"
