from fractions import Fraction

import pytest

from sddlab import graph6
from sddlab.bounds import (
    LITERAL_IDS,
    REGISTRY,
    BoundCheck,
    TheoremId as T,
    check,
    check_t3_9,
    expand_theorems,
    sweep,
    sweep_many,
)
from sddlab.enumeration import GraphStream
from sddlab.errors import BadParameter, HypothesisNotMet, NotMinimalEdge
from sddlab.graph import build_graph, is_biregular, is_regular, minimal_edges, named_graph

F = Fraction


def test_registry_covers_every_id():
    assert set(REGISTRY) == set(T)
    assert LITERAL_IDS == {T.T3_6_b_literal, T.T4_5_literal}


def test_t31_lower_on_c5():
    c = check(T.T3_1_lower, named_graph("C5"))
    assert (c.lhs, c.rhs) == (10, 10)
    assert c.holds and c.equality and c.equality_predicate and c.consistent


def test_t31_upper_on_s5():
    c = check(T.T3_1_upper, named_graph("S5"))
    assert c.lhs == 17 and c.rhs == 4 * (4 + F(1, 4)) == 17
    assert c.equality and c.equality_predicate


def test_t43_lower_on_k23():
    # M1(K2,3) = 2*9 + 3*4 = 30, m = 6; L(K2,3) is 3-regular on 6 vertices with 9 edges.
    c = check(T.T4_3_lower, named_graph("K2,3"))
    assert c.rhs == 18 and c.lhs == 18
    assert c.equality and c.equality_predicate


def test_t36b_literal_falsified_by_c3():
    c = check(T.T3_6_b_literal, named_graph("C3"), alpha=1)
    assert (c.lhs, c.rhs) == (6, 12)
    assert not c.holds


def test_t45_literal_falsified_by_c3():
    # 2 * 4 * chi_2 / (1 * chi_1) = 8 * 48 / 12
    c = check(T.T4_5_literal, named_graph("C3"), alpha=1)
    assert (c.lhs, c.rhs) == (6, 32)
    assert not c.holds


def test_t45_corrected_tight_on_c4():
    c = check(T.T4_5_corrected, named_graph("C4"), alpha=1)
    assert c.exact and c.lhs == c.rhs == 8


def test_t36b_corrected_tight_on_c3():
    c = check(T.T3_6_b_corrected, named_graph("C3"), alpha=1)
    assert c.lhs == c.rhs == 6


def test_alpha_paths():
    g = named_graph("P4_star")
    assert check(T.T3_6_a, g, alpha=1).exact
    half = check(T.T3_6_a, g, alpha="1/2")
    assert half.mode == "approximate" and half.equality is None and half.consistent
    assert check(T.T3_6_a, g, alpha=2).holds
    with pytest.raises(HypothesisNotMet):
        check(T.T3_6_a, g, alpha=0)
    with pytest.raises(BadParameter):
        check(T.T3_6_a, g, alpha="x")


def test_t39_examples():
    c4 = check_t3_9(named_graph("C4"), (0, 1))
    assert (c4.lhs, c4.rhs) == (7, 6) and c4.holds
    p4 = check_t3_9(named_graph("P4"), (0, 1))
    assert (p4.lhs, p4.rhs) == (5, F(9, 2)) and p4.holds
    with pytest.raises(HypothesisNotMet):
        check_t3_9(named_graph("K2"), (0, 1))
    with pytest.raises(NotMinimalEdge):
        check_t3_9(named_graph("P4"), (1, 2))
    with pytest.raises(BadParameter):
        check(T.T3_9, named_graph("P4"))
    assert check(T.T3_9, named_graph("P4"), edge=(3, 2)).edge == (2, 3)


@pytest.mark.parametrize(
    "tid, name",
    [
        (T.C3_5, "S4"),  # Delta = n - 1
        (T.T4_1_i, "P5"),
        (T.T4_1_ii, "K2"),
        (T.T4_3_upper, "K2"),
        (T.T3_1_lower, "K1"),
    ],
)
def test_hypothesis_not_met(tid, name):
    with pytest.raises(HypothesisNotMet):
        check(tid, named_graph(name))


def test_disconnected_rejected():
    with pytest.raises(HypothesisNotMet):
        check(T.T3_1_lower, build_graph(4, [(0, 1), (2, 3)]))


def test_tolerance_semantics():
    loose = BoundCheck(T.T3_6_a, "Bw", 1.0, 1.0 + 1e-12, ">=", True, F(1, 2))
    assert loose.holds and loose.equality is None
    broken = BoundCheck(T.T3_6_a, "Bw", 1.0, 1.0 + 1e-6, ">=", True, F(1, 2))
    assert not broken.holds
    exact_tie = BoundCheck(T.C3_5, "Bw", F(5), F(5), "<", False)
    assert not exact_tie.holds and exact_tie.equality and not exact_tie.consistent


def test_expand_theorems():
    assert expand_theorems(["T3_1"]) == [T.T3_1_lower, T.T3_1_upper]
    assert expand_theorems(["T3_7", "C3_2"]) == [T.C3_2, T.T3_7_m2, T.T3_7_f]
    assert len(expand_theorems(["all"])) == len(T)
    with pytest.raises(BadParameter):
        expand_theorems(["T9_9"])


def test_sweep_t31_lower_upto6(connected_upto6):
    r = sweep(T.T3_1_lower, connected_upto6)
    assert r.violations == 0
    eq = {c.graph6 for c in r.checks if c.equality}
    regular = {graph6.encode(g) for g in connected_upto6 if is_regular(g) is not None}
    assert eq == regular


def test_sweep_literal_finds_c3(connected_upto6):
    r = sweep(T.T3_6_b_literal, connected_upto6, alphas=[1])
    assert r.violations > 0
    assert "Bw" in {d.witness for d in r.discrepancies}


def test_sweep_c35_strict(connected_upto6):
    r = sweep(T.C3_5, GraphStream.builtin(6, n_min=2))
    assert r.violations == 0 and r.equalities == 0
    assert r.checked == sum(1 for g in connected_upto6 if max(g.degree) <= g.n - 2)


def test_discrepancies_replay(connected_upto6):
    res = sweep_many([T.T3_6_b_literal, T.T4_5_literal], connected_upto6, alphas=["1/2", 1, 2])
    for r in res.values():
        assert r.discrepancies
        keys = [d.sort_key() for d in r.discrepancies]
        assert keys == sorted(keys)
        for d in r.discrepancies:
            again = d.replay()
            assert (again.lhs, again.rhs) == (d.lhs, d.rhs)
            if d.kind == "bound_violated":
                assert not again.holds
            else:
                assert not again.consistent


def test_sweep_workers_agree(connected_upto6):
    one = sweep_many([T.T3_4, T.T4_8, T.T3_9], connected_upto6, workers=1)
    two = sweep_many([T.T3_4, T.T4_8, T.T3_9], connected_upto6, workers=3)
    for t in one:
        assert [c.to_dict() for c in one[t].checks] == [c.to_dict() for c in two[t].checks]
        assert one[t].skipped == two[t].skipped


def test_t48_tight_on_regular(connected_upto7):
    for g in connected_upto7:
        k = is_regular(g)
        if k is None or g.m < 2:
            continue
        c = check(T.T4_8, g)
        assert c.lhs == c.rhs == k - 1


def test_c44_tight_iff_regular(connected_upto7):
    for g in connected_upto7:
        if g.m < 2:
            continue
        c = check(T.C4_4_lower, g)
        assert (c.lhs == c.rhs) == (is_regular(g) is not None)


def test_t39_every_minimal_edge(connected_upto7):
    r = sweep(T.T3_9, connected_upto7)
    assert r.violations == 0
    expected = sum(len(minimal_edges(g)) for g in connected_upto7 if g.m > 1)
    assert r.checked == expected


def test_t34_equality_set(connected_upto7):
    r = sweep(T.T3_4, connected_upto7)
    eq = {c.graph6 for c in r.checks if c.equality}
    pred = {graph6.encode(g) for g in connected_upto7
            if is_regular(g) is not None or is_biregular(g) is not None}
    assert eq == pred


def test_check_to_dict_fields():
    d = check(T.T3_1_upper, named_graph("C3_star")).to_dict()
    assert list(d) == ["theorem", "alpha", "graph6", "edge", "lhs", "rhs", "direction", "mode",
                       "holds", "equality", "predicate", "consistent"]
    assert d["lhs"] == "29/3"
