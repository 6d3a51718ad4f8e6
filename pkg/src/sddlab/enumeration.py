"""Canonical forms, exhaustive generation of connected graphs, and SDD searches.

The canonical form of a graph is the graph6 string of its relabelling with
the lexicographically smallest graph6 encoding among all relabellings that
respect an equitable degree refinement.  Generation adds one vertex at a
time to every connected graph of the previous order and deduplicates on
that form.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Literal

from sddlab import graph6
from sddlab.errors import BadParameter, Infeasible, TooLarge
from sddlab.graph import (
    Graph,
    c3_star,
    complete,
    complete_bipartite,
    cycle,
    is_connected,
    p4_star,
    path,
    relabel,
    star,
)
from sddlab.indices import sdd
from sddlab.linegraph import line_graph

CANON_MAX_ORDER = 10
BUILTIN_MAX_ORDER = 8

CanonicalForm = bytes
Target = Literal["G", "L"]


# -- canonical labelling ---------------------------------------------------

def _refine(masks: tuple[int, ...], cells: list[int]) -> list[int]:
    """Split cells (vertex bitmasks) by neighbour counts into every other cell
    until stable.  Sub-cells are ordered by their count signature, so the
    result does not depend on vertex names."""
    while True:
        out = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            bits = cell
            while bits:
                low = bits & -bits
                v = low.bit_length() - 1
                sig = tuple((masks[v] & c).bit_count() for c in cells)
                groups[sig] = groups.get(sig, 0) | low
                bits ^= low
            out.extend(groups[k] for k in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _leaf_code(masks: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        mj = masks[order[j]]
        for i in range(j):
            code = (code << 1) | ((mj >> order[i]) & 1)
    return code


class _Search:
    def __init__(self, g: Graph):
        self.masks = g.masks
        self.n = g.n
        self.best_code: int | None = None
        self.best_order: list[int] | None = None
        self.first_code: int | None = None
        self.first_order: list[int] | None = None
        self.automorphisms: list[list[int]] = []

    def run(self) -> list[int]:
        by_degree: dict[int, int] = {}
        for v, mask in enumerate(self.masks):
            d = mask.bit_count()
            by_degree[d] = by_degree.get(d, 0) | (1 << v)
        cells = [by_degree[d] for d in sorted(by_degree)]
        self._visit(_refine(self.masks, cells), [])
        return self.best_order

    def _orbit_roots(self, fixed: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.automorphisms:
            if all(gamma[v] == v for v in fixed):
                for x in range(self.n):
                    a, b = find(x), find(gamma[x])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(x) for x in range(self.n)]

    def _leaf(self, cells: list[int]) -> None:
        order = [c.bit_length() - 1 for c in cells]
        code = _leaf_code(self.masks, order)
        if self.first_code is None:
            self.first_code, self.first_order = code, order
        elif code == self.first_code:
            self._record(order, self.first_order)
        if self.best_code is None or code < self.best_code:
            self.best_code, self.best_order = code, order
        elif code == self.best_code:
            self._record(order, self.best_order)

    def _record(self, order: list[int], ref: list[int]) -> None:
        gamma = [0] * self.n
        for a, b in zip(order, ref):
            gamma[a] = b
        if any(gamma[v] != v for v in range(self.n)):
            self.automorphisms.append(gamma)

    def _visit(self, cells: list[int], fixed: list[int]) -> None:
        if len(cells) == self.n:
            self._leaf(cells)
            return
        k = next(i for i, c in enumerate(cells) if c & (c - 1))
        target = cells[k]
        explored: list[int] = []
        bits = target
        while bits:
            low = bits & -bits
            v = low.bit_length() - 1
            bits ^= low
            if explored:
                roots = self._orbit_roots(fixed)
                if any(roots[v] == roots[w] for w in explored):
                    continue
            explored.append(v)
            child = cells[:k] + [low, target ^ low] + cells[k + 1:]
            self._visit(_refine(self.masks, child), fixed + [v])


def canonical_labeling(g: Graph) -> list[int]:
    """Permutation ``perm`` such that ``relabel(g, perm)`` is the canonical graph."""
    if g.n > CANON_MAX_ORDER:
        raise TooLarge(f"canonical forms supported for n <= {CANON_MAX_ORDER}, got {g.n}")
    if g.n == 0:
        return []
    order = _Search(g).run()
    perm = [0] * g.n
    for position, v in enumerate(order):
        perm[v] = position
    return perm


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_labeling(g))


def canonical_form(g: Graph) -> CanonicalForm:
    """Relabelling-invariant bytes; equal exactly for isomorphic graphs."""
    return graph6.encode(canonical_graph(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degree) != sorted(h.degree):
        return False
    return canonical_form(g) == canonical_form(h)


# -- generation ------------------------------------------------------------

def _extend(h: Graph, subset: int) -> Graph:
    new = h.n
    extra = tuple((v, new) for v in range(h.n) if subset >> v & 1)
    return Graph(h.n + 1, tuple(sorted(h.edges + extra)))


@functools.lru_cache(maxsize=None)
def _connected_level(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, ()),)
    seen: dict[bytes, Graph] = {}
    for h in _connected_level(n - 1):
        for subset in range(1, 1 << h.n):
            g = _extend(h, subset)
            perm = canonical_labeling(g)
            canon = relabel(g, perm)
            key = graph6.encode(canon).encode("ascii")
            if key not in seen:
                seen[key] = canon
    return tuple(seen[k] for k in sorted(seen))


def enumerate_connected(n: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class of connected graphs
    on ``n`` vertices, sorted by graph6 string."""
    if n < 1:
        raise BadParameter("order must be at least 1")
    if n > BUILTIN_MAX_ORDER:
        raise TooLarge(
            f"builtin generator stops at n = {BUILTIN_MAX_ORDER}; "
            "feed a graph6 file (e.g. from geng -c) instead"
        )
    return _connected_level(n)


@dataclass
class GraphStream:
    """Iterable source of graphs: the builtin generator or a graph6 file.

    Builtin streams yield every connected class with ``n_min <= n <= n_max``
    exactly once.  File streams yield lines in file order, optionally keeping
    only connected graphs and dropping isomorphic repeats (``dedup``).
    """

    n_min: int = 1
    n_max: int = 7
    path: str | os.PathLike | None = None
    connected_only: bool = True
    dedup: bool = False
    m_min: int | None = None
    m_max: int | None = None
    _filters: list[Callable[[Graph], bool]] = field(default_factory=list, repr=False)

    @classmethod
    def builtin(cls, n_max: int, n_min: int = 1, **kw) -> "GraphStream":
        if n_max > BUILTIN_MAX_ORDER:
            raise TooLarge(f"builtin generator stops at n = {BUILTIN_MAX_ORDER}; use --input")
        return cls(n_min=n_min, n_max=n_max, **kw)

    @classmethod
    def from_file(cls, path, *, dedup: bool = False, connected_only: bool = True, **kw) -> "GraphStream":
        return cls(n_min=0, n_max=graph6.MAX_ORDER, path=path, dedup=dedup,
                   connected_only=connected_only, **kw)

    def where(self, predicate: Callable[[Graph], bool]) -> "GraphStream":
        self._filters.append(predicate)
        return self

    def _source(self) -> Iterator[Graph]:
        if self.path is None:
            for n in range(max(self.n_min, 1), self.n_max + 1):
                yield from enumerate_connected(n)
            return
        seen: set[bytes] = set()
        with open(self.path) as fh:
            for g in graph6.read_graph6(fh):
                if self.connected_only and not is_connected(g):
                    continue
                if self.dedup:
                    key = canonical_form(g)
                    if key in seen:
                        continue
                    seen.add(key)
                yield g

    def __iter__(self) -> Iterator[Graph]:
        for g in self._source():
            if not (self.n_min <= g.n <= self.n_max):
                continue
            if self.m_min is not None and g.m < self.m_min:
                continue
            if self.m_max is not None and g.m > self.m_max:
                continue
            if all(f(g) for f in self._filters):
                yield g


# -- naming ----------------------------------------------------------------

def _named_candidates(n: int) -> list[tuple[str, Graph]]:
    out: list[tuple[str, Graph]] = []
    if n >= 1:
        out.append((f"P{n}", path(n)))
    if n >= 2:
        out.append((f"S{n}", star(n)))
    if n >= 3:
        out.append((f"C{n}", cycle(n)))
    if n >= 1:
        out.append((f"K{n}", complete(n)))
    for a in range(2, n // 2 + 1):
        out.append((f"K{a},{n - a}", complete_bipartite(a, n - a)))
    if n == 4:
        out.append(("C3_star", c3_star()))
    if n == 5:
        out.append(("P4_star", p4_star()))
    return out


def identify(g: Graph) -> str | None:
    """Family names matching ``g`` up to isomorphism, joined by ``=``
    (``"P3=S3"``), or None for an unnamed graph."""
    if g.n > CANON_MAX_ORDER:
        return None
    key = canonical_form(g)
    names = [name for name, h in _named_candidates(g.n) if h.m == g.m and canonical_form(h) == key]
    return "=".join(names) if names else None


# -- searches --------------------------------------------------------------

@dataclass(frozen=True)
class Interval:
    """Half-open rational interval ``(lo, hi]``."""

    lo: Fraction
    hi: Fraction

    def __contains__(self, x) -> bool:
        return self.lo < x <= self.hi

    def __str__(self) -> str:
        return f"({self.lo},{self.hi}]"


@dataclass(frozen=True)
class ClassificationResult:
    interval: Interval
    members: tuple[tuple[str, Fraction], ...]  # (graph6, exact SDD), sorted by SDD then graph6


def _target_sdd(g: Graph, target: Target) -> Fraction | None:
    if target == "G":
        return sdd(g)
    if target == "L":
        if g.m < 2:  # L(K2) is a single vertex
            return None
        return sdd(line_graph(g).lg)
    raise BadParameter(f"target must be 'G' or 'L', not {target!r}")


def _check_range(n_max: int) -> None:
    if not 1 <= n_max <= BUILTIN_MAX_ORDER:
        raise TooLarge(f"n_max must be in 1..{BUILTIN_MAX_ORDER}")


def _scored(n_max: int, target: Target) -> Iterator[tuple[Graph, Fraction]]:
    for n in range(2, n_max + 1):
        for g in enumerate_connected(n):
            value = _target_sdd(g, target)
            if value is not None:
                yield g, value


def classify_by_sdd(
    n_max: int, intervals: Iterable[Interval | tuple], target: Target = "G"
) -> list[ClassificationResult]:
    """For each interval, every connected graph with ``2 <= n <= n_max`` whose
    SDD (of ``G`` or of ``L(G)``) falls inside.  Members are named by ``G``."""
    _check_range(n_max)
    ivs = [iv if isinstance(iv, Interval) else Interval(Fraction(iv[0]), Fraction(iv[1])) for iv in intervals]
    buckets: list[list[tuple[str, Fraction]]] = [[] for _ in ivs]
    for g, value in _scored(n_max, target):
        for bucket, iv in zip(buckets, ivs):
            if value in iv:
                bucket.append((graph6.encode(g), value))
    return [
        ClassificationResult(iv, tuple(sorted(b, key=lambda t: (t[1], t[0]))))
        for iv, b in zip(ivs, buckets)
    ]


def inverse_solve(target: Fraction | int | str, n_max: int, target_object: Target = "G") -> list[str]:
    """graph6 strings of every connected graph (``n <= n_max``) whose SDD equals
    ``target`` exactly.  An empty list certifies absence within the range."""
    _check_range(n_max)
    value = Fraction(target)
    return sorted(graph6.encode(g) for g, s in _scored(n_max, target_object) if s == value)


@dataclass(frozen=True)
class ExtremalResult:
    value: Fraction
    witnesses: tuple[str, ...]  # full tie set, sorted by graph6

    @property
    def witness(self) -> str:
        return self.witnesses[0]


def extremal_search(
    n: int, m: int | None = None, direction: Literal["min", "max"] = "min"
) -> ExtremalResult:
    """Smallest or largest SDD over connected graphs of order ``n`` (and size
    ``m`` if given), with every graph attaining it."""
    if direction not in ("min", "max"):
        raise BadParameter("direction must be 'min' or 'max'")
    if not 1 <= n <= BUILTIN_MAX_ORDER:
        raise Infeasible(f"n must be in 1..{BUILTIN_MAX_ORDER}")
    if m is not None and not (n - 1 <= m <= n * (n - 1) // 2):
        raise Infeasible(f"no connected graph has n={n}, m={m}")
    pool = [g for g in enumerate_connected(n) if m is None or g.m == m]
    if not pool:
        raise Infeasible(f"no connected graph has n={n}" + ("" if m is None else f", m={m}"))
    scored = [(sdd(g), graph6.encode(g)) for g in pool]
    best = min(s for s, _ in scored) if direction == "min" else max(s for s, _ in scored)
    return ExtremalResult(best, tuple(sorted(code for s, code in scored if s == best)))
