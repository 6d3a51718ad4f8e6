"""Exit criteria.  Each test is one criterion; the terminal summary prints a
PASS/FAIL line per criterion.

Predicates used for equality sets are recomputed here from networkx degree
data, not taken from the bound registry.
"""

import time
from fractions import Fraction

import networkx as nx
import pytest

from conftest import labeled_connected_classes, to_nx
from sddlab import cli, enumeration, graph6
from sddlab.bounds import TheoremId as T, sweep_many
from sddlab.enumeration import classify_by_sdd, enumerate_connected, identify
from sddlab.graph import named_graph
from sddlab.indices import sdd, zagreb_m1
from sddlab.linegraph import line_degree_bounds, line_graph

F = Fraction

SWEEP_ALPHAS = [F(1, 2), F(1), F(2)]
MUST_HOLD = [
    T.T3_1_lower, T.T3_1_upper, T.C3_2, T.T3_3_lower, T.T3_3_upper, T.T3_4, T.C3_5,
    T.T3_6_a, T.T3_6_b_corrected, T.T3_7_m2, T.T3_7_f, T.T3_9, T.T4_1_i, T.T4_1_ii,
    T.T4_2_lower, T.T4_2_upper, T.T4_3_lower, T.T4_3_upper, T.C4_4_lower, T.C4_4_upper,
    T.T4_5_corrected, T.T4_6, T.T4_8,
]


@pytest.fixture(scope="module")
def upto7():
    return [g for n in range(2, 8) for g in enumerate_connected(n)]


@pytest.fixture(scope="module")
def sweeps(upto7):
    started = time.perf_counter()
    res = sweep_many(list(T), upto7, SWEEP_ALPHAS, workers=1)
    return res, time.perf_counter() - started


@pytest.mark.criterion("1 exact SDD fixtures")
def test_exact_fixtures():
    expected = {
        "K2": 2, "S3": 5, "C3": 6, "P4": 7, "C4": 8, "S4": 10,
        "C3_star": F(29, 3), "P5": 9, "P4_star": F(34, 3), "S5": 17,
    }
    started = time.perf_counter()
    got = {name: sdd(named_graph(name)) for name in expected}
    elapsed = time.perf_counter() - started
    assert got == {k: F(v) for k, v in expected.items()}
    assert all(isinstance(v, Fraction) for v in got.values())
    assert elapsed < 0.1


@pytest.mark.criterion("2 classification of G and L(G), n_max = 8")
def test_classification():
    enumeration._connected_level.cache_clear()
    started = time.perf_counter()
    ivs = [(2, 4), (4, 6), (6, 8)]
    on_g = classify_by_sdd(8, ivs, "G")
    on_l = classify_by_sdd(8, ivs, "L")
    elapsed = time.perf_counter() - started

    def named(result):
        return [(identify(graph6.decode(code)), value) for code, value in result.members]

    assert named(on_g[0]) == []
    assert named(on_g[1]) == [("P3=S3", 5), ("C3=K3", 6)]
    assert named(on_g[2]) == [("P4", 7), ("C4=K2,2", 8)]
    assert named(on_l[0]) == []
    assert sorted(named(on_l[1])) == sorted([("P4", 5), ("C3=K3", 6), ("S4", 6)])
    assert named(on_l[2]) == [("P5", 7), ("C4=K2,2", 8)]
    assert sdd(line_graph(named_graph("P4")).lg) == 5
    assert sdd(line_graph(named_graph("C3")).lg) == sdd(line_graph(named_graph("S4")).lg) == 6
    assert elapsed < 60, f"classification took {elapsed:.1f}s"


@pytest.mark.criterion("3 zero violations of every non-literal bound, n <= 7")
def test_sweeps_hold(sweeps):
    res, elapsed = sweeps
    for tid in MUST_HOLD:
        r = res[tid]
        assert r.checked > 0, tid
        assert r.violations == 0, (tid, [d.to_dict() for d in r.discrepancies[:3]])
    # alpha-parameterised bounds really ran at all three exponents
    for tid in (T.T3_6_a, T.T3_6_b_corrected, T.T4_5_corrected):
        assert {c.alpha for c in res[tid].checks} == set(SWEEP_ALPHAS)
        assert any(c.mode == "approximate" for c in res[tid].checks)
    assert elapsed < 600, f"sweep took {elapsed:.1f}s"


@pytest.mark.criterion("4 expected falsifications found automatically")
def test_expected_falsifications(sweeps):
    res, _ = sweeps
    c3 = graph6.encode(named_graph("C3"))
    for tid, rhs in ((T.T3_6_b_literal, 12), (T.T4_5_literal, 32)):
        hits = [d for d in res[tid].discrepancies
                if d.witness == c3 and d.alpha == 1 and d.kind == "bound_violated"]
        assert len(hits) == 1, tid
        assert (hits[0].lhs, hits[0].rhs) == (6, rhs)
        assert not hits[0].replay().holds


def _is_regular(h):
    return len({d for _, d in h.degree()}) == 1


def _is_biregular(h):
    degs = {d for _, d in h.degree()}
    return (len(degs) == 2 and nx.is_bipartite(h)
            and all(h.degree(u) != h.degree(v) for u, v in h.edges()))


def _is_path(h, k=None):
    return nx.is_tree(h) and max(d for _, d in h.degree()) <= 2 and (k is None or h.number_of_nodes() == k)


def _is_star(h):
    n = h.number_of_nodes()
    return nx.is_tree(h) and max(d for _, d in h.degree()) == n - 1


def _is_cycle(h):
    return h.number_of_nodes() >= 3 and all(d == 2 for _, d in h.degree()) and nx.is_connected(h)


EQUALITY_PREDICATES = {
    T.T3_1_lower: _is_regular,
    T.T3_1_upper: _is_star,
    T.C3_2: lambda h: h.number_of_nodes() == 2,
    T.T3_3_lower: _is_regular,
    T.T3_3_upper: _is_regular,
    T.T3_4: lambda h: _is_regular(h) or _is_biregular(h),
    T.T3_7_m2: lambda h: h.number_of_nodes() == 2,
    T.T3_7_f: lambda h: h.number_of_nodes() == 2,
    T.T4_1_i: lambda h: _is_cycle(h) or (_is_star(h) and h.number_of_nodes() == 4),
    T.T4_1_ii: lambda h: _is_path(h, 3) or _is_path(h, 4),
    T.T4_2_lower: lambda h: _is_regular(h) or _is_path(h, 3),
    T.T4_2_upper: _is_regular,
    T.T4_3_lower: lambda h: _is_regular(h) or _is_biregular(h),
    T.T4_3_upper: lambda h: _is_regular(h) or _is_path(h, 4),
    T.C4_4_lower: _is_regular,
    T.C4_4_upper: _is_regular,
    T.T4_8: _is_regular,
    T.T3_6_a: _is_regular,
    T.T3_6_b_corrected: _is_regular,
    T.T4_5_corrected: _is_regular,
    T.C3_5: lambda h: False,
    T.T4_6: lambda h: False,
    T.T3_9: lambda h: False,
}


@pytest.mark.criterion("5 equality set equals characterising predicate, n <= 7")
def test_equality_characterisations(sweeps):
    res, _ = sweeps
    for tid, predicate in EQUALITY_PREDICATES.items():
        checks = [c for c in res[tid].checks if c.exact]
        assert checks, tid
        eq = {c.graph6 for c in checks if c.equality}
        pred = {c.graph6 for c in checks if predicate(to_nx(graph6.decode(c.graph6)))}
        assert eq == pred, (tid, sorted(eq ^ pred)[:5])
        assert res[tid].mismatches == 0, tid


@pytest.mark.criterion("6 structural lemmas on L(G), n <= 7")
def test_structural_lemmas(upto7):
    for g in upto7:
        res = line_graph(g)
        lg = res.lg
        assert lg.m == zagreb_m1(g) / 2 - g.m
        for e, (u, v) in enumerate(res.edge_index):
            assert lg.degree[e] == g.degree[u] + g.degree[v] - 2
        h = to_nx(g)
        if _is_path(h):
            assert lg.m == g.m - 1
        else:
            assert g.m <= lg.m
        if g.m >= 2:
            lo, hi = line_degree_bounds(g)
            assert lo <= min(lg.degree) <= max(lg.degree) <= hi
            assert _is_regular(to_nx(lg)) == (_is_regular(h) or _is_biregular(h))


@pytest.mark.criterion("7 builtin counts match labelled brute force")
def test_enumeration_oracle():
    for n, frozen in ((4, 6), (5, 21), (6, 112)):
        oracle = len(labeled_connected_classes(n))
        assert oracle == frozen
        assert len(enumerate_connected(n)) == oracle


@pytest.mark.criterion("8 repeated full runs give byte-identical reports")
def test_determinism(tmp_path, capsys):
    report = tmp_path / "full.json"
    argv = ["verify", "--theorems", "all", "--n-max", "7", "--alpha", "1/2,1,2", "--report", str(report)]
    outputs = []
    for workers in ("1", "1", "2"):
        code = cli.main(argv + ["--workers", workers] if workers != "1" else argv)
        out, _ = capsys.readouterr()
        assert code == 0
        outputs.append((out, report.read_bytes()))
    assert outputs[0] == outputs[1]
    # a different worker count changes only the echoed command
    strip = lambda b: b.replace(b' --workers 2', b'')  # noqa: E731
    assert strip(outputs[2][1]) == outputs[0][1]
