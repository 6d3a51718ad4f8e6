"""Simple undirected graphs on dense 0-based vertex labels.

A :class:`Graph` is immutable once built.  Degrees, neighbour sets and
neighbour bitmasks are computed at construction, so every index and bound
in the package reads them in O(1).
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from sddlab.errors import (
    BadParameter,
    DuplicateEdge,
    EmptyGraph,
    LoopEdge,
    MalformedEdgeList,
    VertexOutOfRange,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple graph with ``n`` vertices and a sorted tuple of edges ``(u, v)``, ``u < v``.

    Use :func:`build_graph` to construct one from arbitrary input; the
    constructor assumes the edges are already normalised.
    """

    n: int
    edges: tuple[Edge, ...]
    degree: tuple[int, ...] = field(init=False, repr=False, compare=False)
    neighbors: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "neighbors", tuple(frozenset(s) for s in nbrs))
        object.__setattr__(self, "degree", tuple(len(s) for s in nbrs))
        object.__setattr__(
            self, "masks", tuple(sum(1 << w for w in s) for s in nbrs)
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


class DegreeExtremes(NamedTuple):
    delta: int
    Delta: int


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate ``edges`` and return the graph on vertices ``0..n-1``.

    Raises LoopEdge, DuplicateEdge or VertexOutOfRange on bad input.
    """
    if n < 0:
        raise BadParameter(f"negative vertex count {n}")
    seen: set[Edge] = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"edge {e} given twice")
        seen.add(e)
    return Graph(n, tuple(sorted(seen)))


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        bits = frontier
        while bits:
            low = bits & -bits
            reach |= g.masks[low.bit_length() - 1]
            bits ^= low
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def degree_extremes(g: Graph) -> DegreeExtremes:
    if g.n == 0:
        raise EmptyGraph("degree extremes of the empty graph")
    return DegreeExtremes(min(g.degree), max(g.degree))


def is_regular(g: Graph) -> int | None:
    """Common degree if all degrees agree, else None."""
    if g.n == 0:
        raise EmptyGraph("regularity of the empty graph")
    first = g.degree[0]
    return first if all(d == first for d in g.degree) else None


def is_biregular(g: Graph) -> tuple[int, int] | None:
    """``(Delta, delta)`` with ``Delta > delta`` if every edge joins a
    degree-``Delta`` vertex to a degree-``delta`` vertex, else None.

    Such a graph is bipartite by degree class.  Regular graphs return None.
    """
    if g.m == 0:
        return None
    d = g.degree
    hi = max(max(d[u], d[v]) for u, v in g.edges)
    lo = min(min(d[u], d[v]) for u, v in g.edges)
    if hi == lo:
        return None
    for u, v in g.edges:
        if {d[u], d[v]} != {hi, lo}:
            return None
    return hi, lo


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def cyclomatic_number(g: Graph) -> int:
    """``m - n + c`` where ``c`` counts components; ``m - n + 1`` when connected."""
    return g.m - g.n + component_count(g)


def component_count(g: Graph) -> int:
    unseen = (1 << g.n) - 1
    count = 0
    while unseen:
        low = unseen & -unseen
        comp = low
        frontier = low
        while frontier:
            reach = 0
            bits = frontier
            while bits:
                b = bits & -bits
                reach |= g.masks[b.bit_length() - 1]
                bits ^= b
            frontier = reach & ~comp
            comp |= frontier
        unseen &= ~comp
        count += 1
    return count


def minimal_edges(g: Graph) -> list[Edge]:
    """Edges ``u0v0`` where each endpoint's degree is at most the degree of
    each of its other neighbours.  Sorted lexicographically."""
    d = g.degree
    out = []
    for u0, v0 in g.edges:
        if all(d[u0] <= d[w] for w in g.neighbors[u0] if w != v0) and all(
            d[v0] <= d[w] for w in g.neighbors[v0] if w != u0
        ):
            out.append((u0, v0))
    return out


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    e = (u, v) if u < v else (v, u)
    if e not in g.edges:
        raise BadParameter(f"{e} is not an edge")
    return Graph(g.n, tuple(x for x in g.edges if x != e))


def relabel(g: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise BadParameter("relabelling is not a permutation of the vertices")
    edges = []
    for u, v in g.edges:
        a, b = perm[u], perm[v]
        edges.append((a, b) if a < b else (b, a))
    return Graph(g.n, tuple(sorted(edges)))


# -- named families --------------------------------------------------------

def path(n: int) -> Graph:
    if n < 1:
        raise BadParameter("P_n needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameter("C_n needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star of order n, centre 0."""
    if n < 2:
        raise BadParameter("S_n needs n >= 2")
    return Graph(n, tuple((0, i) for i in range(1, n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParameter("K_n needs n >= 1")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise BadParameter("K_{a,b} needs a, b >= 1")
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def c3_star() -> Graph:
    """Triangle 0-1-2 with a pendant vertex 3 on vertex 0."""
    return build_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def p4_star() -> Graph:
    """Path 0-1-2-3 with a pendant vertex 4 on the degree-two vertex 1."""
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (1, 4)])


MAX_NAMED_ORDER = 64

_NAME_RE = re.compile(r"^([PCSK])_?(\d+)$")
_BIPARTITE_RE = re.compile(r"^K_?\{?(\d+)[,_x](\d+)\}?$")


def named_graph(name: str) -> Graph:
    """Construct a named graph from strings like ``P4``, ``C_5``, ``S5``,
    ``K3``, ``K2,3``, ``K_{2,3}``, ``C3_star`` and ``P4_star``."""
    key = name.strip()
    low = key.lower().replace("*", "_star")
    if low in ("c3_star", "c3star", "c_3_star"):
        return c3_star()
    if low in ("p4_star", "p4star", "p_4_star"):
        return p4_star()
    m = _BIPARTITE_RE.match(key)
    if m:
        a, b = int(m.group(1)), int(m.group(2))
        if a + b > MAX_NAMED_ORDER:
            raise BadParameter(f"{name}: order above {MAX_NAMED_ORDER}")
        return complete_bipartite(a, b)
    m = _NAME_RE.match(key.upper())
    if not m:
        raise BadParameter(f"unknown graph name {name!r}")
    family, n = m.group(1), int(m.group(2))
    if n > MAX_NAMED_ORDER:
        raise BadParameter(f"{name}: order above {MAX_NAMED_ORDER}")
    return {"P": path, "C": cycle, "S": star, "K": complete}[family](n)


# -- edge-list text format -------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``.

    Labels that are already integers in ``0..n-1`` are kept.  Any other
    labels are mapped to ``0..n-1`` in order of first appearance.
    """
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise MalformedEdgeList("first line must be 'n m'")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
    except ValueError as exc:
        raise MalformedEdgeList(f"bad header {lines[0]}") from exc
    body = lines[1:]
    if len(body) != m:
        raise MalformedEdgeList(f"header promises {m} edges, found {len(body)}")
    if any(len(row) != 2 for row in body):
        raise MalformedEdgeList("edge lines must hold exactly two labels")
    labels = [tok for row in body for tok in row]
    if all(tok.isdigit() and int(tok) < n for tok in labels):
        pairs = [(int(a), int(b)) for a, b in body]
    else:
        index: dict[str, int] = {}
        for tok in labels:
            index.setdefault(tok, len(index))
        if len(index) > n:
            raise MalformedEdgeList(f"{len(index)} distinct labels but n = {n}")
        pairs = [(index[a], index[b]) for a, b in body]
    return build_graph(n, pairs)


def format_edge_list(g: Graph) -> str:
    rows = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(rows) + "\n"
