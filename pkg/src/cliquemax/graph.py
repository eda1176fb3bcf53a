"""Small simple graphs stored as per-vertex neighbour bitmasks.

Vertices are the integers ``0..n-1`` and ``adj[v]`` is an int whose bit ``u``
is set iff ``uv`` is an edge.  Graphs are immutable values; equality is
bit-identity of the adjacency rows (isomorphism lives in :mod:`cliquemax.canon`).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphSizeError(ValueError):
    """Raised when a construction would exceed :data:`MAX_VERTICES`."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of an ambient graph on ``n`` vertices."""

    bits: int
    n: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"vertex set {self.bits:#x} has bits outside 0..{self.n - 1}")

    @classmethod
    def of(cls, vertices: Iterable[int], n: int) -> "VertexSet":
        bits = 0
        for v in vertices:
            bits |= 1 << v
        return cls(bits, n)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return bool(self.bits >> v & 1)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        n, adj = self.n, self.adj
        if not 0 <= n <= MAX_VERTICES:
            raise GraphSizeError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        for v, row in enumerate(adj):
            if row < 0 or row >> n:
                raise ValueError(f"row {v} has bits outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int]) -> "Graph":
        # Skips validation; callers guarantee a symmetric loop-free adjacency.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> Iterator[tuple[int, int]]:
        for v, row in enumerate(self.adj):
            for u in iter_bits(row >> (v + 1)):
                yield v, v + 1 + u

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph._trusted(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``G + H``: the vertices of ``h`` follow those of ``g``."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise GraphSizeError(f"disjoint union has {n} > {MAX_VERTICES} vertices")
    return Graph._trusted(n, list(g.adj) + [row << g.n for row in h.adj])


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.adj[v].bit_count()


def min_degree(g: Graph) -> int | None:
    """Smallest degree, or ``None`` for the graph on no vertices."""
    return min(g.degrees(), default=None)


def max_degree(g: Graph) -> int | None:
    """Largest degree, or ``None`` for the graph on no vertices."""
    return max(g.degrees(), default=None)


def neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return VertexSet(g.adj[v], g.n)


def induced_subgraph(g: Graph, s: VertexSet | int | Iterable[int]) -> Graph:
    """Subgraph induced on ``s``, relabelled in increasing original order."""
    if isinstance(s, VertexSet):
        mask = s.bits
    elif isinstance(s, int):
        mask = s
    else:
        mask = VertexSet.of(s, g.n).bits
    if mask >> g.n:
        raise IndexError(f"vertex set {mask:#x} not contained in 0..{g.n - 1}")
    keep = list(iter_bits(mask))
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in iter_bits(g.adj[v] & mask):
            row |= 1 << pos[u]
        rows.append(row)
    return Graph._trusted(len(keep), rows)


def delete_vertex(g: Graph, v: int) -> Graph:
    _check_vertex(g, v)
    return induced_subgraph(g, g.vertex_mask & ~(1 << v))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    rows = [0] * g.n
    for v, row in enumerate(g.adj):
        image = 0
        for u in iter_bits(row):
            image |= 1 << perm[u]
        rows[perm[v]] = image
    return Graph._trusted(g.n, rows)


# -- named constructions -----------------------------------------------------

def _require_nonnegative(**params: int) -> None:
    for name, value in params.items():
        if value < 0:
            raise ValueError(f"{name} must be nonnegative, got {value}")


def _require_size(n: int) -> None:
    if n > MAX_VERTICES:
        raise GraphSizeError(f"construction needs {n} > {MAX_VERTICES} vertices")


def empty(n: int) -> Graph:
    _require_nonnegative(n=n)
    _require_size(n)
    return Graph._trusted(n, [0] * n)


def complete(n: int) -> Graph:
    _require_nonnegative(n=n)
    _require_size(n)
    full = (1 << n) - 1
    return Graph._trusted(n, [full & ~(1 << v) for v in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with parts ``0..a-1`` and ``a..a+b-1``."""
    _require_nonnegative(a=a, b=b)
    _require_size(a + b)
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    return Graph._trusted(a + b, [right] * a + [left] * b)


def cycle(n: int) -> Graph:
    _require_nonnegative(n=n)
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    _require_nonnegative(n=n)
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def extremal_cliques(a: int, max_deg: int, b: int) -> Graph:
    """``a K_{max_deg+1} + K_b``, the conjectured maximiser of clique counts."""
    _require_nonnegative(a=a, max_deg=max_deg, b=b)
    _require_size(a * (max_deg + 1) + b)
    g = empty(0)
    for _ in range(a):
        g = disjoint_union(g, complete(max_deg + 1))
    return disjoint_union(g, complete(b))


_CONSTRUCTIONS = {
    "empty": empty,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "cycle": cycle,
    "path": path,
    "extremal_cliques": extremal_cliques,
}


def construct(kind: str, *params: int) -> Graph:
    """Build a named graph, e.g. ``construct("complete_bipartite", 2, 4)``."""
    try:
        builder = _CONSTRUCTIONS[kind]
    except KeyError:
        raise ValueError(f"unknown construction {kind!r}; choose from {sorted(_CONSTRUCTIONS)}") from None
    return builder(*params)


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices (``2**C(n,2)`` of them)."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph._trusted(n, rows)
