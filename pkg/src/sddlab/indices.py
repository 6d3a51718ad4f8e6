"""Vertex-degree-based indices.

Rational-valued indices (SDD, M1, M2, ID, F and the integer-exponent
families) are returned as exact ``Fraction`` values.  GA and real-exponent
families are floats; comparisons on them use :data:`FLOAT_TOL`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational, Real
from typing import Literal, Union

from sddlab.errors import BadParameter, IsolatedVertex, ZeroDegreeNegativeExponent
from sddlab.graph import Graph

ExactRational = Fraction
Number = Union[Fraction, float]

FLOAT_TOL = 1e-9

INDEX_IDS = ("sdd", "m1", "m2", "m1a", "m2a", "chi", "ga", "id", "f")
ALPHA_INDICES = frozenset({"m1a", "m2a", "chi"})


@dataclass(frozen=True)
class IndexValue:
    value: Number
    mode: Literal["exact", "approximate"]
    index_id: str
    alpha: Real | None = None

    @property
    def exact(self) -> bool:
        return self.mode == "exact"

    def render(self) -> str:
        return render_number(self.value)


def render_number(x: Number) -> str:
    """``"p/q"`` (or ``"p"``) for exact values, 12 significant digits for floats."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, int):
        return str(x)
    return format(x, ".12g")


def integer_exponent(alpha: Real) -> int | None:
    """``alpha`` as an int when it is integral, else None."""
    if isinstance(alpha, bool):
        raise BadParameter("exponent must be a number")
    if isinstance(alpha, int):
        return alpha
    if isinstance(alpha, Rational):
        return int(alpha) if alpha.denominator == 1 else None
    alpha = float(alpha)
    if math.isfinite(alpha) and alpha.is_integer():
        return int(alpha)
    return None


def _power(base: int, alpha: Real) -> Number:
    k = integer_exponent(alpha)
    if k is not None:
        return Fraction(base) ** k
    return float(base) ** float(alpha)


def sdd(g: Graph) -> Fraction:
    """Symmetric division deg index: sum over edges of ``du/dv + dv/du``."""
    d = g.degree
    return sum(
        (Fraction(d[u] * d[u] + d[v] * d[v], d[u] * d[v]) for u, v in g.edges),
        Fraction(0),
    )


def zagreb_m1(g: Graph) -> Fraction:
    d = g.degree
    by_edges = sum(d[u] + d[v] for u, v in g.edges)
    by_vertices = sum(x * x for x in d)
    assert by_edges == by_vertices, "first Zagreb edge and vertex sums disagree"
    return Fraction(by_vertices)


def zagreb_m2(g: Graph) -> Fraction:
    d = g.degree
    return Fraction(sum(d[u] * d[v] for u, v in g.edges))


def general_zagreb(
    g: Graph, alpha: Real, which: Literal["vertex", "edge"] = "vertex"
) -> IndexValue:
    """``M1^alpha`` (``which="vertex"``: sum of ``d^alpha``) or ``M2^alpha``
    (``which="edge"``: sum of ``(du*dv)^alpha``)."""
    d = g.degree
    if which == "vertex":
        if float(alpha) <= 0 and 0 in d:
            raise ZeroDegreeNegativeExponent("isolated vertex raised to a non-positive power")
        terms = [_power(x, alpha) for x in d]
        index_id = "m1a"
    elif which == "edge":
        terms = [_power(d[u] * d[v], alpha) for u, v in g.edges]
        index_id = "m2a"
    else:
        raise BadParameter(f"which must be 'vertex' or 'edge', not {which!r}")
    return _sum_value(terms, alpha, index_id)


def sum_connectivity_chi(g: Graph, alpha: Real) -> IndexValue:
    """General sum-connectivity: sum over edges of ``(du + dv)^alpha``."""
    d = g.degree
    terms = [_power(d[u] + d[v], alpha) for u, v in g.edges]
    return _sum_value(terms, alpha, "chi")


def _sum_value(terms: list[Number], alpha: Real, index_id: str) -> IndexValue:
    if integer_exponent(alpha) is not None:
        return IndexValue(sum(terms, Fraction(0)), "exact", index_id, alpha)
    return IndexValue(math.fsum(terms), "approximate", index_id, alpha)


def geometric_arithmetic(g: Graph) -> float:
    d = g.degree
    return math.fsum(2.0 * math.sqrt(d[u] * d[v]) / (d[u] + d[v]) for u, v in g.edges)


def inverse_degree(g: Graph) -> Fraction:
    if 0 in g.degree:
        raise IsolatedVertex("inverse degree is undefined with isolated vertices")
    return sum((Fraction(1, x) for x in g.degree), Fraction(0))


def forgotten(g: Graph) -> Fraction:
    d = g.degree
    by_edges = sum(d[u] ** 2 + d[v] ** 2 for u, v in g.edges)
    assert by_edges == sum(x ** 3 for x in d), "forgotten edge and vertex sums disagree"
    return Fraction(by_edges)


def compute(g: Graph, index_id: str, alpha: Real | None = None) -> IndexValue:
    """Dispatch by CLI/report identifier."""
    key = index_id.lower()
    if key in ALPHA_INDICES:
        if alpha is None:
            raise BadParameter(f"index {key!r} needs an exponent (--alpha)")
        if key == "m1a":
            return general_zagreb(g, alpha, "vertex")
        if key == "m2a":
            return general_zagreb(g, alpha, "edge")
        return sum_connectivity_chi(g, alpha)
    exact = {
        "sdd": sdd,
        "m1": zagreb_m1,
        "m2": zagreb_m2,
        "id": inverse_degree,
        "f": forgotten,
    }
    if key in exact:
        return IndexValue(exact[key](g), "exact", key)
    if key == "ga":
        return IndexValue(geometric_arithmetic(g), "approximate", key)
    raise BadParameter(f"unknown index {index_id!r}; expected one of {', '.join(INDEX_IDS)}")
