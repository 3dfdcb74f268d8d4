"""Upper domatic number, transitivity and related vertex-partition numbers of graphs."""

from .graph import Graph, ParseError, classify, complement, parse_dimacs, parse_edge_list
from .partition import VertexPartition, classify_partition, domination_digraph, dominates

__all__ = [
    "Graph",
    "ParseError",
    "VertexPartition",
    "classify",
    "classify_partition",
    "complement",
    "domination_digraph",
    "dominates",
    "parse_dimacs",
    "parse_edge_list",
]
__version__ = "0.1.0"
