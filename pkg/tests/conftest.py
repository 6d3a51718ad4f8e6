"""Shared fixtures and independent oracles.

The oracles here go through networkx and plain degree lists, never through
the package's own index or canonical-form code.
"""

from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest

from sddlab.enumeration import enumerate_connected
from sddlab.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def nx_sdd(h: nx.Graph) -> Fraction:
    return sum((Fraction(h.degree(u), h.degree(v)) + Fraction(h.degree(v), h.degree(u))
                for u, v in h.edges()), Fraction(0))


def labeled_connected_classes(n: int) -> list[nx.Graph]:
    """Brute force: every edge mask on n labelled vertices, keep connected
    ones, dedup by networkx isomorphism inside WL-hash buckets."""
    pairs = list(combinations(range(n), 2))
    buckets: dict[str, list[nx.Graph]] = {}
    for mask in range(1 << len(pairs)):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
        if n > 0 and not nx.is_connected(h):
            continue
        key = nx.weisfeiler_lehman_graph_hash(h, iterations=3)
        bucket = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(h, other) for other in bucket):
            bucket.append(h)
    return [h for b in buckets.values() for h in b]


@pytest.fixture(scope="session")
def connected_upto7() -> list[Graph]:
    return [g for n in range(2, 8) for g in enumerate_connected(n)]


@pytest.fixture(scope="session")
def connected_upto6() -> list[Graph]:
    return [g for n in range(2, 7) for g in enumerate_connected(n)]


ACCEPTANCE: dict[str, bool] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        ACCEPTANCE[marker.args[0]] = rep.passed


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if ACCEPTANCE[name] else 'FAIL'}  {name}")
