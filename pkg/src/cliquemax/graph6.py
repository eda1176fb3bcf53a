"""graph6 encoding for graphs on at most 62 vertices.

One size byte ``63 + n``, then the upper triangle read column by column
(x01, x02, x12, x03, ...) packed six bits per byte, most significant first,
each byte offset by 63.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph

GRAPH6_MAX_VERTICES = 62


class Graph6Error(ValueError):
    pass


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX_VERTICES:
        raise Graph6Error(f"graph6 short form holds at most {GRAPH6_MAX_VERTICES} vertices, got {n}")
    adj = g.adj
    out = [chr(63 + n)]
    acc = nbits = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def graph6_decode(s: str | bytes) -> Graph:
    if isinstance(s, bytes):
        s = s.decode("ascii")
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c < 64 for c in codes):
        raise Graph6Error(f"character outside the graph6 range in {s!r}")
    n = codes[0]
    if n > GRAPH6_MAX_VERTICES:
        raise Graph6Error("long-form graph6 sizes are not supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = codes[1:]
    if len(body) != nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes for n={n}, got {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph._trusted(n, rows)


def read_graph6_lines(stream: TextIO) -> Iterator[Graph]:
    for line in stream:
        line = line.strip()
        if line:
            yield graph6_decode(line)


def write_graph6_lines(stream: TextIO, graphs: Iterable[Graph]) -> int:
    count = 0
    for g in graphs:
        stream.write(graph6_encode(g) + "\n")
        count += 1
    return count
