"""Registry of SDD bounds for graphs and line graphs, and the sweep harness.

Every bound is a :class:`Bound`: a quantity built from the graph (``lhs``),
the claimed bound (``rhs``), a comparison direction, and the structural
predicate claimed to characterise equality.  Entries flagged ``literal``
reproduce printed formulas that are known to fail numerically; their
``corrected`` twins follow the same derivation with the exponent that the
derivation actually supports.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from numbers import Real
from typing import Callable, Iterable, Literal

from sddlab import graph6
from sddlab.errors import BadParameter, HypothesisNotMet, NotMinimalEdge
from sddlab.graph import (
    Edge,
    Graph,
    delete_edge,
    is_biregular,
    is_connected,
    is_regular,
    minimal_edges,
)
from sddlab.indices import FLOAT_TOL, Number, forgotten, inverse_degree, render_number, sdd, zagreb_m1, zagreb_m2
from sddlab.linegraph import line_graph

Direction = Literal["<=", "<", ">=", ">"]


class TheoremId(str, Enum):
    T3_1_lower = "T3_1_lower"
    T3_1_upper = "T3_1_upper"
    C3_2 = "C3_2"
    T3_3_lower = "T3_3_lower"
    T3_3_upper = "T3_3_upper"
    T3_4 = "T3_4"
    C3_5 = "C3_5"
    T3_6_a = "T3_6_a"
    T3_6_b_literal = "T3_6_b_literal"
    T3_6_b_corrected = "T3_6_b_corrected"
    T3_7_m2 = "T3_7_m2"
    T3_7_f = "T3_7_f"
    T3_9 = "T3_9"
    T4_1_i = "T4_1_i"
    T4_1_ii = "T4_1_ii"
    T4_2_lower = "T4_2_lower"
    T4_2_upper = "T4_2_upper"
    T4_3_lower = "T4_3_lower"
    T4_3_upper = "T4_3_upper"
    C4_4_lower = "C4_4_lower"
    C4_4_upper = "C4_4_upper"
    T4_5_literal = "T4_5_literal"
    T4_5_corrected = "T4_5_corrected"
    T4_6 = "T4_6"
    T4_8 = "T4_8"

    def __str__(self) -> str:
        return self.value


# -- exact-when-possible arithmetic ----------------------------------------

def _as_fraction(alpha: Real | str) -> Fraction:
    try:
        return Fraction(alpha)
    except (TypeError, ValueError) as exc:
        raise BadParameter(f"bad exponent {alpha!r}") from exc


def _pow(x: Number, e: Fraction) -> Number:
    """``x**e``, exact when ``x`` is rational and ``e`` an integer."""
    if e.denominator == 1 and isinstance(x, (Fraction, int)):
        return Fraction(x) ** int(e)
    return float(x) ** float(e)


def _root(x: Number, alpha: Fraction) -> Number:
    """``x**(1/alpha)``."""
    return _pow(x, 1 / alpha)


# -- per-graph quantities --------------------------------------------------

class _Quantities:
    """Lazily computed quantities of one graph shared by all bound formulas."""

    def __init__(self, g: Graph):
        self.g = g

    @cached_property
    def n(self) -> int:
        return self.g.n

    @cached_property
    def m(self) -> int:
        return self.g.m

    @cached_property
    def delta(self) -> int:
        return min(self.g.degree)

    @cached_property
    def Delta(self) -> int:
        return max(self.g.degree)

    @cached_property
    def sdd(self) -> Fraction:
        return sdd(self.g)

    @cached_property
    def m1(self) -> Fraction:
        return zagreb_m1(self.g)

    @cached_property
    def m2(self) -> Fraction:
        return zagreb_m2(self.g)

    @cached_property
    def f(self) -> Fraction:
        return forgotten(self.g)

    @cached_property
    def id(self) -> Fraction:
        return inverse_degree(self.g)

    @cached_property
    def lg(self) -> Graph:
        return line_graph(self.g).lg

    @cached_property
    def sdd_l(self) -> Fraction:
        return sdd(self.lg)

    @cached_property
    def id_l(self) -> Fraction:
        return inverse_degree(self.lg)

    @cached_property
    def regular(self) -> bool:
        return is_regular(self.g) is not None

    @cached_property
    def biregular(self) -> bool:
        return is_biregular(self.g) is not None

    @cached_property
    def is_path(self) -> bool:
        return self.m == self.n - 1 and self.Delta <= 2

    @cached_property
    def is_cycle(self) -> bool:
        return self.n >= 3 and self.m == self.n and all(d == 2 for d in self.g.degree)

    @cached_property
    def is_star(self) -> bool:
        return self.n >= 2 and self.m == self.n - 1 and self.Delta == self.n - 1

    @cached_property
    def low_l(self) -> int:
        """Lower bound ``max(2*delta - 2, 1)`` on the line-graph degrees."""
        return max(2 * self.delta - 2, 1)

    @cached_property
    def high_l(self) -> int:
        """Upper bound ``2*Delta - 2`` on the line-graph degrees."""
        return 2 * self.Delta - 2

    def m1_power(self, e: Fraction) -> Number:
        return _sum(_pow(d, e) for d in self.g.degree)

    def m2_power(self, e: Fraction) -> Number:
        d = self.g.degree
        return _sum(_pow(d[u] * d[v], e) for u, v in self.g.edges)

    def chi(self, e: Fraction) -> Number:
        d = self.g.degree
        return _sum(_pow(d[u] + d[v], e) for u, v in self.g.edges)


def _sum(terms: Iterable[Number]) -> Number:
    terms = list(terms)
    if all(isinstance(t, Fraction) for t in terms):
        return sum(terms, Fraction(0))
    return float(sum(float(t) for t in terms))


def _ratio_sum(a: Number, b: Number) -> Number:
    """``a/b + b/a``."""
    return a / b + b / a


# -- hypotheses ------------------------------------------------------------

def _nontrivial(q: _Quantities) -> str | None:
    if q.m == 0:
        return "graph has no edges"
    if not is_connected(q.g):
        return "graph is disconnected"
    return None


def _not_k2(q: _Quantities) -> str | None:
    return "G is K2, so L(G) has no edges" if q.m < 2 else None


def _max_degree_small(q: _Quantities) -> str | None:
    return None if q.Delta <= q.n - 2 else "needs maximum degree <= n - 2"


def _not_path(q: _Quantities) -> str | None:
    if q.m < 2:
        return "G is K2"
    return "G is a path" if q.is_path else None


# -- registry --------------------------------------------------------------

Formula = Callable[[_Quantities, Fraction], Number]


@dataclass(frozen=True)
class Bound:
    id: TheoremId
    direction: Direction
    lhs: Formula
    rhs: Formula
    predicate: Callable[[_Quantities], bool]
    describe: str
    hypotheses: tuple[Callable[[_Quantities], str | None], ...] = ()
    uses_alpha: bool = False
    literal: bool = False
    # strict bounds claim equality never happens; predicate is constant False
    strict: bool = False


def _never(q: _Quantities) -> bool:
    return False


def _t36_a(q, a):
    return 2 * q.delta ** 2 * _pow(q.m, (a + 1) / a) / _root(q.m2_power(a), a)


def _t36_b_literal(q, a):
    return q.delta ** 2 * _pow(2 * q.m, (a + 1) / a) / (q.Delta * _root(q.m1_power(a), a))


def _t36_b_corrected(q, a):
    return q.delta ** 2 * _pow(2 * q.m, (a + 1) / a) / (q.Delta * _root(q.m1_power(a + 1), a))


def _t45_literal(q, a):
    D = q.Delta
    return D * q.delta ** 2 * q.chi(a + 1) / ((D - 1) ** 2 * _root(q.chi(a), a))


def _t45_corrected(q, a):
    D = q.Delta
    shrink = Fraction(D - 1, D)
    top = q.low_l ** 2 * _pow(q.m1 - 2 * q.m, (a + 1) / a)
    return top / (q.high_l * _pow(shrink, (a + 1) / a) * _root(q.chi(a + 1), a))


def _t48_rhs(q, a):
    D, d, low = q.Delta, q.delta, q.low_l
    return Fraction(D * D - d, 4 * d) * Fraction(4 * (D - 1) ** 2 + low * low, (D - 1) * low)


_SDD = lambda q, a: q.sdd  # noqa: E731
_SDD_L = lambda q, a: q.sdd_l  # noqa: E731
_SECTION4 = (_nontrivial, _not_k2)

REGISTRY: dict[TheoremId, Bound] = {
    b.id: b
    for b in [
        Bound(TheoremId.T3_1_lower, ">=", _SDD, lambda q, a: Fraction(2 * q.m),
              lambda q: q.regular, "SDD(G) >= 2m", (_nontrivial,)),
        Bound(TheoremId.T3_1_upper, "<=", _SDD,
              lambda q, a: q.m * (q.n - 1 + Fraction(1, q.n - 1)),
              lambda q: q.is_star, "SDD(G) <= m(n-1+1/(n-1))", (_nontrivial,)),
        Bound(TheoremId.C3_2, ">=", _SDD, lambda q, a: Fraction(2 * (q.n - 1)),
              lambda q: q.n == 2, "SDD(G) >= 2(n-1)", (_nontrivial,)),
        Bound(TheoremId.T3_3_lower, ">=", _SDD, lambda q, a: q.delta ** 2 * q.id,
              lambda q: q.regular, "SDD(G) >= delta^2 ID(G)", (_nontrivial,)),
        Bound(TheoremId.T3_3_upper, "<=", _SDD, lambda q, a: q.Delta ** 2 * q.id,
              lambda q: q.regular, "SDD(G) <= Delta^2 ID(G)", (_nontrivial,)),
        Bound(TheoremId.T3_4, "<=", _SDD,
              lambda q, a: q.m * _ratio_sum(Fraction(q.Delta), Fraction(q.delta)),
              lambda q: q.regular or q.biregular, "SDD(G) <= m(Delta/delta+delta/Delta)",
              (_nontrivial,)),
        Bound(TheoremId.C3_5, "<", _SDD,
              lambda q, a: q.m * (q.n - 2 + Fraction(1, q.n - 2)),
              _never, "SDD(G) < m(n-2+1/(n-2)) when Delta <= n-2",
              (_nontrivial, _max_degree_small), strict=True),
        Bound(TheoremId.T3_6_a, ">=", _SDD, _t36_a, lambda q: q.regular,
              "SDD(G) >= 2 delta^2 m^((a+1)/a) / M2^a(G)^(1/a)", (_nontrivial,), uses_alpha=True),
        Bound(TheoremId.T3_6_b_literal, ">=", _SDD, _t36_b_literal, lambda q: q.regular,
              "SDD(G) >= delta^2 (2m)^((a+1)/a) / (Delta M1^a(G)^(1/a))  [as printed]",
              (_nontrivial,), uses_alpha=True, literal=True),
        Bound(TheoremId.T3_6_b_corrected, ">=", _SDD, _t36_b_corrected, lambda q: q.regular,
              "SDD(G) >= delta^2 (2m)^((a+1)/a) / (Delta M1^(a+1)(G)^(1/a))",
              (_nontrivial,), uses_alpha=True),
        Bound(TheoremId.T3_7_m2, ">=", _SDD, lambda q, a: Fraction(2 * q.m * q.m) / q.m2,
              lambda q: q.n == 2, "SDD(G) >= 2m^2/M2(G)", (_nontrivial,)),
        Bound(TheoremId.T3_7_f, ">=", _SDD, lambda q, a: Fraction(4 * q.m * q.m) / q.f,
              lambda q: q.n == 2, "SDD(G) >= 4m^2/F(G)", (_nontrivial,)),
        Bound(TheoremId.T3_9, ">", lambda q, a: None, lambda q, a: None, _never,
              "SDD(G - e) > SDD(G) - (du^2+dv^2)/(du dv) for a minimal edge e",
              (_nontrivial,), strict=True),
        Bound(TheoremId.T4_1_i, ">=", _SDD_L, lambda q, a: Fraction(2 * q.m),
              lambda q: q.is_cycle or (q.is_star and q.n == 4),
              "SDD(L(G)) >= 2m for non-paths", _SECTION4 + (_not_path,)),
        Bound(TheoremId.T4_1_ii, "<=", _SDD_L,
              lambda q, a: (q.m1 / 2 - q.m) * (q.m - 1 + Fraction(1, q.m - 1)),
              lambda q: q.is_path and q.n in (3, 4),
              "SDD(L(G)) <= (M1/2-m)(m-1+1/(m-1))", _SECTION4),
        Bound(TheoremId.T4_2_lower, ">=", _SDD_L,
              lambda q, a: max(4 * (q.delta - 1) ** 2, 1) * q.id_l,
              lambda q: q.regular or (q.is_path and q.n == 3),
              "SDD(L(G)) >= max(4(delta-1)^2,1) ID(L(G))", _SECTION4),
        Bound(TheoremId.T4_2_upper, "<=", _SDD_L,
              lambda q, a: 4 * (q.Delta - 1) ** 2 * q.id_l,
              lambda q: q.regular, "SDD(L(G)) <= 4(Delta-1)^2 ID(L(G))", _SECTION4),
        Bound(TheoremId.T4_3_lower, ">=", _SDD_L, lambda q, a: q.m1 - 2 * q.m,
              lambda q: q.regular or q.biregular, "SDD(L(G)) >= M1(G)-2m", _SECTION4),
        Bound(TheoremId.T4_3_upper, "<=", _SDD_L,
              lambda q, a: (q.m1 - 2 * q.m) / 2 * _ratio_sum(Fraction(q.high_l), Fraction(q.low_l)),
              lambda q: q.regular or (q.is_path and q.n == 4),
              "SDD(L(G)) <= (M1-2m)/2 (A/B+B/A), A=2Delta-2, B=max(2delta-2,1)", _SECTION4),
        Bound(TheoremId.C4_4_lower, ">=", lambda q, a: q.sdd + q.sdd_l, lambda q, a: q.m1,
              lambda q: q.regular, "SDD(G)+SDD(L(G)) >= M1(G)", _SECTION4),
        Bound(TheoremId.C4_4_upper, "<=", lambda q, a: q.sdd + q.sdd_l,
              lambda q, a: q.m1 / 2 * _ratio_sum(Fraction(q.high_l), Fraction(q.low_l)),
              lambda q: q.regular, "SDD(G)+SDD(L(G)) <= M1/2 (A/B+B/A)", _SECTION4),
        Bound(TheoremId.T4_5_literal, ">=", _SDD_L, _t45_literal, lambda q: q.regular,
              "SDD(L(G)) >= Delta delta^2 chi_(a+1) / ((Delta-1)^2 chi_a^(1/a))  [as printed]",
              _SECTION4, uses_alpha=True, literal=True),
        Bound(TheoremId.T4_5_corrected, ">=", _SDD_L, _t45_corrected, lambda q: q.regular,
              "SDD(L(G)) >= B^2 (M1-2m)^((a+1)/a) / (A ((Delta-1)/Delta)^((a+1)/a) chi_(a+1)^(1/a))",
              _SECTION4, uses_alpha=True),
        Bound(TheoremId.T4_6, ">", _SDD_L,
              lambda q, a: Fraction(q.Delta ** 3 * (q.m1 - 2 * q.m) ** 2,
                                    (q.Delta - 1) ** 3 * q.chi(Fraction(3))),
              _never, "SDD(L(G)) > Delta^3 (M1-2m)^2 / ((Delta-1)^3 chi_3)",
              _SECTION4, strict=True),
        Bound(TheoremId.T4_8, "<=", lambda q, a: q.sdd_l / q.sdd, _t48_rhs,
              lambda q: q.regular, "SDD(L(G))/SDD(G) <= (Delta^2-delta)/(4 delta) (4(Delta-1)^2+B^2)/((Delta-1)B)",
              _SECTION4),
    ]
}

LITERAL_IDS = frozenset(t for t, b in REGISTRY.items() if b.literal)


def parse_theorem(name: str | TheoremId) -> TheoremId:
    if isinstance(name, TheoremId):
        return name
    try:
        return TheoremId(name)
    except ValueError:
        raise BadParameter(f"unknown theorem id {name!r}") from None


def expand_theorems(names: Iterable[str]) -> list[TheoremId]:
    """Resolve ids, ``"all"`` and prefixes like ``"T3_1"`` (both sides) in registry order."""
    wanted: set[TheoremId] = set()
    for raw in names:
        name = raw.strip()
        if not name:
            continue
        if name.lower() == "all":
            wanted.update(REGISTRY)
            continue
        matches = [t for t in REGISTRY if t.value == name or t.value.startswith(name + "_")]
        if not matches:
            raise BadParameter(f"unknown theorem id {name!r}")
        wanted.update(matches)
    return [t for t in REGISTRY if t in wanted]


# -- checks ----------------------------------------------------------------

def _close(lhs: Number, rhs: Number) -> bool:
    return abs(float(lhs) - float(rhs)) <= FLOAT_TOL * max(1.0, abs(float(rhs)))


@dataclass(frozen=True)
class BoundCheck:
    theorem: TheoremId
    graph6: str
    lhs: Number
    rhs: Number
    direction: Direction
    equality_predicate: bool
    alpha: Fraction | None = None
    edge: Edge | None = None

    @property
    def exact(self) -> bool:
        return isinstance(self.lhs, (Fraction, int)) and isinstance(self.rhs, (Fraction, int))

    @property
    def mode(self) -> str:
        return "exact" if self.exact else "approximate"

    @property
    def holds(self) -> bool:
        lhs, rhs = self.lhs, self.rhs
        if self.exact:
            return {"<=": lhs <= rhs, "<": lhs < rhs, ">=": lhs >= rhs, ">": lhs > rhs}[self.direction]
        # Approximate: only a gap beyond the tolerance counts as a violation.
        if _close(lhs, rhs):
            return True
        return (lhs < rhs) if self.direction in ("<=", "<") else (lhs > rhs)

    @property
    def equality(self) -> bool | None:
        """Exact equality of both sides; None on the floating path."""
        return self.lhs == self.rhs if self.exact else None

    @property
    def consistent(self) -> bool:
        return self.equality is None or self.equality == self.equality_predicate

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "alpha": None if self.alpha is None else render_number(self.alpha),
            "graph6": self.graph6,
            "edge": None if self.edge is None else list(self.edge),
            "lhs": render_number(self.lhs),
            "rhs": render_number(self.rhs),
            "direction": self.direction,
            "mode": self.mode,
            "holds": self.holds,
            "equality": self.equality,
            "predicate": self.equality_predicate,
            "consistent": self.consistent,
        }


def _check_alpha(bound: Bound, alpha) -> Fraction | None:
    if not bound.uses_alpha:
        return None
    a = _as_fraction(1 if alpha is None else alpha)
    if a <= 0:
        raise HypothesisNotMet(f"{bound.id} needs alpha > 0")
    return a


def _hypotheses(bound: Bound, q: _Quantities) -> None:
    for hyp in bound.hypotheses:
        reason = hyp(q)
        if reason:
            raise HypothesisNotMet(f"{bound.id}: {reason}")


def check(theorem: TheoremId | str, g: Graph, alpha: Real | str | None = None,
          edge: Edge | None = None, _q: _Quantities | None = None) -> BoundCheck:
    """Evaluate one bound on one graph.

    Raises HypothesisNotMet when ``g`` is outside the bound's scope.
    """
    tid = parse_theorem(theorem)
    if tid is TheoremId.T3_9:
        if edge is None:
            raise BadParameter("T3_9 needs an edge; use check_t3_9 or pass edge=")
        return check_t3_9(g, edge)
    bound = REGISTRY[tid]
    q = _q or _Quantities(g)
    _hypotheses(bound, q)
    a = _check_alpha(bound, alpha)
    return BoundCheck(
        theorem=tid,
        graph6=graph6.encode(g),
        lhs=bound.lhs(q, a),
        rhs=bound.rhs(q, a),
        direction=bound.direction,
        equality_predicate=bound.predicate(q),
        alpha=a,
    )


def check_t3_9(g: Graph, e: Edge) -> BoundCheck:
    """Deleting a minimal edge ``e = u0v0`` lowers SDD by strictly less than
    ``(d_u0^2 + d_v0^2) / (d_u0 d_v0)``."""
    u, v = e if e[0] < e[1] else (e[1], e[0])
    reason = _nontrivial(_Quantities(g))
    if reason:
        raise HypothesisNotMet(f"T3_9: {reason}")
    if (u, v) not in minimal_edges(g):
        raise NotMinimalEdge(f"{(u, v)} is not a minimal edge")
    reduced = delete_edge(g, u, v)
    if reduced.m == 0:
        raise HypothesisNotMet("T3_9: G - e has no edges (G is K2)")
    du, dv = g.degree[u], g.degree[v]
    return BoundCheck(
        theorem=TheoremId.T3_9,
        graph6=graph6.encode(g),
        lhs=sdd(reduced),
        rhs=sdd(g) - Fraction(du * du + dv * dv, du * dv),
        direction=">",
        equality_predicate=False,
        edge=(u, v),
    )


# -- sweeps ----------------------------------------------------------------

@dataclass(frozen=True)
class DiscrepancyRecord:
    theorem: TheoremId
    witness: str
    lhs: Number
    rhs: Number
    direction: Direction
    kind: Literal["bound_violated", "equality_mismatch"]
    alpha: Fraction | None = None
    edge: Edge | None = None

    def sort_key(self):
        return (self.witness, self.theorem.value, -1 if self.alpha is None else self.alpha,
                self.edge or ())

    def replay(self) -> BoundCheck:
        return check(self.theorem, graph6.decode(self.witness), self.alpha, self.edge)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "alpha": None if self.alpha is None else render_number(self.alpha),
            "graph6": self.witness,
            "edge": None if self.edge is None else list(self.edge),
            "lhs": render_number(self.lhs),
            "rhs": render_number(self.rhs),
            "direction": self.direction,
            "kind": self.kind,
        }


def discrepancy_of(c: BoundCheck) -> DiscrepancyRecord | None:
    if not c.holds:
        kind = "bound_violated"
    elif not c.consistent:
        kind = "equality_mismatch"
    else:
        return None
    return DiscrepancyRecord(c.theorem, c.graph6, c.lhs, c.rhs, c.direction, kind, c.alpha, c.edge)


@dataclass
class SweepResult:
    theorem: TheoremId
    checks: list[BoundCheck] = field(default_factory=list)
    discrepancies: list[DiscrepancyRecord] = field(default_factory=list)
    skipped: int = 0

    @property
    def checked(self) -> int:
        return len(self.checks)

    @property
    def equalities(self) -> int:
        return sum(1 for c in self.checks if c.equality)

    @property
    def violations(self) -> int:
        return sum(1 for d in self.discrepancies if d.kind == "bound_violated")

    @property
    def mismatches(self) -> int:
        return sum(1 for d in self.discrepancies if d.kind == "equality_mismatch")

    @property
    def literal(self) -> bool:
        return REGISTRY[self.theorem].literal

    def summary(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "literal": self.literal,
            "checked": self.checked,
            "skipped": self.skipped,
            "equalities": self.equalities,
            "violations": self.violations,
            "equality_mismatches": self.mismatches,
        }


def _checks_for_graph(tid: TheoremId, g: Graph, alphas: list) -> tuple[list[BoundCheck], int]:
    """All checks of ``tid`` on ``g`` and the number of skipped attempts."""
    if tid is TheoremId.T3_9:
        edges = minimal_edges(g) if g.m else []
        out, skipped = [], 0
        for e in edges:
            try:
                out.append(check_t3_9(g, e))
            except HypothesisNotMet:
                skipped += 1
        return out, skipped + (0 if edges else 1)
    bound = REGISTRY[tid]
    q = _Quantities(g)
    out, skipped = [], 0
    for a in (alphas if bound.uses_alpha else [None]):
        try:
            out.append(check(tid, g, a, _q=q))
        except HypothesisNotMet:
            skipped += 1
    return out, skipped


def _worker(payload: tuple[list[str], list[str], list]) -> list[tuple[str, list[BoundCheck], int]]:
    tids, codes, alphas = payload
    results = []
    for code in codes:
        g = graph6.decode(code)
        for t in tids:
            checks, skipped = _checks_for_graph(TheoremId(t), g, alphas)
            results.append((t, checks, skipped))
    return results


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("SDDLAB_THREADS", "1")))
    except ValueError:
        return 1


def sweep_many(theorems: Iterable[TheoremId | str], stream: Iterable[Graph],
               alphas: Iterable[Real | str] = (1,), workers: int | None = None) -> dict[TheoremId, SweepResult]:
    """Check every theorem on every graph of ``stream``.

    Graphs are partitioned across ``workers`` processes (default from
    ``SDDLAB_THREADS``); results are merged in stream order, so output does
    not depend on the worker count.
    """
    tids = [parse_theorem(t) for t in theorems]
    alpha_list = [_as_fraction(a) for a in alphas] or [Fraction(1)]
    codes = [graph6.encode(g) for g in stream]
    workers = worker_count() if workers is None else max(1, workers)
    names = [t.value for t in tids]
    if workers == 1 or len(codes) < 2:
        chunks_out = [_worker((names, codes, alpha_list))]
    else:
        size = -(-len(codes) // (workers * 4))
        parts = [(names, codes[i:i + size], alpha_list) for i in range(0, len(codes), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks_out = list(pool.map(_worker, parts))
    results = {t: SweepResult(t) for t in tids}
    for chunk in chunks_out:
        for t, checks, skipped in chunk:
            r = results[TheoremId(t)]
            r.checks.extend(checks)
            r.skipped += skipped
    for r in results.values():
        found = [d for d in (discrepancy_of(c) for c in r.checks) if d is not None]
        r.discrepancies = sorted(found, key=DiscrepancyRecord.sort_key)
    return results


def sweep(theorem: TheoremId | str, stream: Iterable[Graph],
          alphas: Iterable[Real | str] = (1,), workers: int | None = None) -> SweepResult:
    tid = parse_theorem(theorem)
    return sweep_many([tid], stream, alphas, workers)[tid]
