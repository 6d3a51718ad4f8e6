"""Line graphs and the structural facts tying ``G`` to ``L(G)``."""

from __future__ import annotations

from dataclasses import dataclass

from sddlab.errors import BadParameter, NoEdges, TooSmall
from sddlab.graph import (
    Edge,
    Graph,
    degree_extremes,
    is_biregular,
    is_connected,
    is_regular,
)


@dataclass(frozen=True)
class LineGraphResult:
    lg: Graph
    edge_index: tuple[Edge, ...]  # lg vertex i represents G-edge edge_index[i]


def line_graph(g: Graph) -> LineGraphResult:
    """Vertex ``i`` of the result is the ``i``-th edge of ``g`` in lexicographic order."""
    if g.m == 0:
        raise NoEdges("line graph of an edgeless graph")
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)
    lg_edges = set()
    for ids in incident:
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                lg_edges.add((ids[a], ids[b]))
    # Simple graphs share at most one endpoint per edge pair, so no duplicates.
    return LineGraphResult(Graph(g.m, tuple(sorted(lg_edges))), g.edges)


def line_edge_count(g: Graph) -> int:
    """``m_L = M1(G)/2 - m``, written as a sum of ``C(d, 2)``."""
    return sum(d * (d - 1) // 2 for d in g.degree)


def line_degree_bounds(g: Graph) -> tuple[int, int]:
    """``(max(2*delta - 2, 1), 2*Delta - 2)`` bracketing the degrees of ``L(G)``."""
    if g.m < 2 or not is_connected(g):
        raise TooSmall("needs a connected graph with at least two edges")
    delta, Delta = degree_extremes(g)
    return max(2 * delta - 2, 1), 2 * Delta - 2


def line_is_regular_iff(g: Graph) -> tuple[bool, bool]:
    """``(predicted, actual)`` regularity of ``L(G)``; predicted from ``G`` being
    regular or biregular, actual read off the constructed line graph."""
    predicted = is_regular(g) is not None or is_biregular(g) is not None
    actual = is_regular(line_graph(g).lg) is not None
    return predicted, actual


def preimage_lookup(shape: str, n: int) -> list[str]:
    """Connected graphs ``G`` (by name) with ``L(G)`` isomorphic to ``shape`` of order ``n``.

    ``shape`` is one of ``"S"``, ``"C"``, ``"P"``.  The table matches what
    exhaustive search over small connected graphs finds; in particular every
    cycle is its own line graph.
    """
    shape = shape.upper().rstrip("_N")
    if shape == "S":
        if n < 2:
            raise BadParameter("S_n needs n >= 2")
        return {2: ["P3"], 3: ["P4"]}.get(n, [])
    if shape == "C":
        if n < 3:
            raise BadParameter("C_n needs n >= 3")
        return ["C3", "S4"] if n == 3 else [f"C{n}"]
    if shape == "P":
        if n < 1:
            raise BadParameter("P_n needs n >= 1")
        return [f"P{n + 1}"]
    raise BadParameter(f"unknown line-graph shape {shape!r}")
