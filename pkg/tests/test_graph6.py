import random

import networkx as nx
import pytest

from conftest import to_nx
from sddlab import graph6
from sddlab.enumeration import enumerate_connected
from sddlab.errors import MalformedGraph6
from sddlab.graph import Graph, build_graph, named_graph


def reference_bytes(g: Graph) -> str:
    return nx.to_graph6_bytes(to_nx(g), header=False).decode("ascii").strip()


def test_k2_roundtrip():
    code = graph6.encode(named_graph("K2"))
    assert len(code) == 2
    assert graph6.decode(code) == named_graph("K2")


def test_p5_roundtrip():
    p5 = named_graph("P5")
    assert graph6.decode(graph6.encode(p5)) == p5


def test_known_codes():
    assert graph6.encode(named_graph("C3")) == "Bw"
    assert graph6.encode(Graph(0, ())) == "?"
    assert graph6.encode(Graph(1, ())) == "@"


def test_connected_order5_matches_reference_packer():
    graphs = enumerate_connected(5)
    assert len(graphs) == 21
    for g in graphs:
        assert graph6.encode(g) == reference_bytes(g)


def test_random_roundtrip_10000():
    rng = random.Random(20240517)
    for _ in range(10_000):
        n = rng.randint(0, 20)
        p = rng.random()
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        g = build_graph(n, edges)
        code = graph6.encode(g)
        assert graph6.decode(code) == g
        assert graph6.encode(graph6.decode(code)) == code


def test_random_against_networkx_decoder():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 30)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
        g = build_graph(n, edges)
        h = nx.from_graph6_bytes(graph6.encode(g).encode())
        assert sorted(tuple(sorted(e)) for e in h.edges()) == list(g.edges)


def test_header_and_bytes_input():
    assert graph6.decode(b">>graph6<<Bw\n") == named_graph("C3")


@pytest.mark.parametrize(
    "text",
    [
        "",
        "B",  # missing data byte
        "Bww",  # too many data bytes
        "B\x7f",  # byte above 126
        "Bx",  # 'x' = 57 -> padding bits set
        "~?@",  # multi-byte size header
    ],
)
def test_malformed(text):
    with pytest.raises(MalformedGraph6):
        graph6.decode(text)


def test_too_large_to_encode():
    with pytest.raises(MalformedGraph6):
        graph6.encode(Graph(63, ()))


def test_stream_helpers(tmp_path):
    path = tmp_path / "g.g6"
    with open(path, "w") as fh:
        graph6.write_graph6(enumerate_connected(4), fh)
    with open(path) as fh:
        back = list(graph6.read_graph6(fh))
    assert back == list(enumerate_connected(4))
