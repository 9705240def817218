"""Motif-based clustering of directed graphs and networks."""
from .errors import BlowupError, GraphError, MotifClustError, ParseError, PreconditionError
from .family import MotifFamily
from .functors import compose, evaluate, union
from .graph import C, D, Graph, K, L, PointedGraph, RL, T
from .weights import INF, ExtendedNetwork

__all__ = [
    "BlowupError", "GraphError", "MotifClustError", "ParseError", "PreconditionError",
    "MotifFamily", "compose", "evaluate", "union",
    "C", "D", "Graph", "K", "L", "PointedGraph", "RL", "T",
    "INF", "ExtendedNetwork",
]
