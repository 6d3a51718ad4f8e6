"""Exact symmetric division deg (SDD) index toolkit: indices, line graphs,
bound verification over exhaustively enumerated connected graphs."""

from sddlab.errors import SddLabError
from sddlab.graph import Graph, build_graph, named_graph
from sddlab.graph6 import decode as graph6_decode, encode as graph6_encode
from sddlab.indices import sdd

__all__ = ["Graph", "SddLabError", "build_graph", "graph6_decode", "graph6_encode", "named_graph", "sdd"]
__version__ = "0.1.0"
