"""graph6 reading and writing for graphs with fewer than 63 vertices.

Layout: one size byte ``63 + n``, then the upper adjacency triangle in
column order ``x(0,1), x(0,2), x(1,2), x(0,3), ...`` packed six bits per
byte, most significant bit first, each byte offset by 63 and the last one
zero-padded.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from sddlab.errors import MalformedGraph6
from sddlab.graph import Graph

MAX_ORDER = 62


def _data_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def encode(g: Graph) -> str:
    if g.n > MAX_ORDER:
        raise MalformedGraph6(f"graph6 supports n <= {MAX_ORDER}, got {g.n}")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits.extend([0] * (-len(bits) % 6))
    chars = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        chars.append(chr(63 + value))
    return "".join(chars)


def decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise MalformedGraph6("empty graph6 line")
    codes = [ord(c) for c in line]
    if any(c < 63 or c > 126 for c in codes):
        raise MalformedGraph6(f"byte outside [63,126] in {line!r}")
    n = codes[0] - 63
    if n > MAX_ORDER:
        raise MalformedGraph6(f"multi-byte size header not supported in {line!r}")
    data = codes[1:]
    if len(data) != _data_length(n):
        raise MalformedGraph6(
            f"{line!r}: expected {_data_length(n)} data bytes for n={n}, got {len(data)}"
        )
    total = n * (n - 1) // 2
    pad = len(data) * 6 - total
    if pad and (data[-1] - 63) & ((1 << pad) - 1):
        raise MalformedGraph6(f"{line!r}: nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, tuple(sorted(edges)))


def read_graph6(stream: TextIO | Iterable[str]) -> Iterator[Graph]:
    """Yield one graph per non-blank line."""
    for line in stream:
        if line.strip():
            yield decode(line)


def write_graph6(graphs: Iterable[Graph], stream: TextIO) -> None:
    for g in graphs:
        stream.write(encode(g) + "\n")
