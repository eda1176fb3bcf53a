"""Isomorph-free generation of graphs under a degree constraint.

Graphs are grown one vertex at a time by canonical augmentation: a child
``P + v`` (``v`` joined to a set ``S`` of old vertices) is kept only if ``v``
lies in the automorphism orbit of the child's canonical deletion vertex, and
only one ``S`` per ``Aut(P)``-orbit is tried.  Every isomorphism class is then
produced exactly once and nothing needs to be remembered between branches.

The canonical deletion vertex is taken among vertices of maximum degree, so
most candidate sets are rejected by counting alone.  Maximum degree is
hereditary, which keeps every intermediate graph inside the constraint;
minimum-degree classes are generated as complements of maximum-degree ones.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .canon import canonize
from .graph import Graph, complement, iter_bits
from .graph6 import graph6_decode, graph6_encode

ENUMERATION_MAX_VERTICES = 16


class DegreeMode(str, enum.Enum):
    MAX_AT_MOST = "max_at_most"
    MIN_AT_LEAST = "min_at_least"


@dataclass(frozen=True)
class EnumerationConfig:
    n: int
    degree_mode: DegreeMode | None = None
    degree_bound: int = 0
    edge_count: int | None = None
    connected_only: bool = False

    def __post_init__(self):
        if not 0 <= self.n <= ENUMERATION_MAX_VERTICES:
            raise ValueError(f"n must lie in 0..{ENUMERATION_MAX_VERTICES}, got {self.n}")
        if self.degree_mode is not None:
            object.__setattr__(self, "degree_mode", DegreeMode(self.degree_mode))
            if not 0 <= self.degree_bound < max(self.n, 1):
                raise ValueError(f"degree bound must lie in 0..n-1, got {self.degree_bound} for n={self.n}")
        if self.edge_count is not None and self.edge_count < 0:
            raise ValueError("edge_count must be nonnegative")

    @classmethod
    def max_degree(cls, n: int, bound: int, **kw) -> "EnumerationConfig":
        return cls(n, DegreeMode.MAX_AT_MOST, bound, **kw)

    @classmethod
    def min_degree(cls, n: int, bound: int, **kw) -> "EnumerationConfig":
        return cls(n, DegreeMode.MIN_AT_LEAST, bound, **kw)

    @property
    def complemented(self) -> bool:
        return self.degree_mode is DegreeMode.MIN_AT_LEAST

    @property
    def generation_max_degree(self) -> int:
        """Maximum-degree bound of the graphs actually grown."""
        if self.degree_mode is DegreeMode.MAX_AT_MOST:
            return self.degree_bound
        if self.degree_mode is DegreeMode.MIN_AT_LEAST:
            return self.n - 1 - self.degree_bound
        return max(self.n - 1, 0)

    @property
    def generation_edge_count(self) -> int | None:
        if self.edge_count is None or not self.complemented:
            return self.edge_count
        return self.n * (self.n - 1) // 2 - self.edge_count

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "degree_mode": self.degree_mode.value if self.degree_mode else None,
            "degree_bound": self.degree_bound,
            "edge_count": self.edge_count,
            "connected_only": self.connected_only,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "EnumerationConfig":
        return cls(**d)


@dataclass(frozen=True)
class EnumerationTask:
    """Everything below one grown graph on ``len(prefix)`` vertices.

    ``prefix`` is in the generation view (before any complementing), as graph6.
    """

    prefix: str
    config: EnumerationConfig = field(compare=True)

    @property
    def prefix_graph(self) -> Graph:
        return graph6_decode(self.prefix)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.vertex_mask


def _orbit_minimal(mask: int, gens: Sequence[Sequence[int]]) -> bool:
    """True if ``mask`` is the least element of its orbit under ``gens``."""
    if not gens:
        return True
    seen = {mask}
    stack = [mask]
    while stack:
        m = stack.pop()
        for g in gens:
            img = 0
            for v in iter_bits(m):
                img |= 1 << g[v]
            if img < mask:
                return False
            if img not in seen:
                seen.add(img)
                stack.append(img)
    return True


class _Generator:
    """Depth-first canonical augmentation from a fixed starting graph."""

    def __init__(self, n: int, max_deg: int, edge_count: int | None):
        self.n = n
        self.max_deg = max_deg
        self.edge_count = edge_count

    def _max_more_edges(self, k: int) -> int:
        # edges still addable when growing from k to n vertices
        return sum(min(j, self.max_deg) for j in range(k, self.n))

    def children(self, adj: list[int], gens) -> Iterator[tuple[list[int], tuple | None]]:
        """Accepted children of ``adj``; yields (rows, automorphism generators or None)."""
        k = len(adj)
        degs = [r.bit_count() for r in adj]
        dmax = max(degs, default=0)
        cap = self.max_deg
        edges = sum(degs) // 2
        open_vertices = [u for u in range(k) if degs[u] < cap]
        need_gens = k + 1 < self.n
        lo = dmax
        hi = min(cap, len(open_vertices))
        if self.edge_count is not None:
            remaining = self.edge_count - edges
            hi = min(hi, remaining)
            lo = max(lo, remaining - self._max_more_edges(k + 1))
        for size in range(lo, hi + 1):
            for subset in combinations(open_vertices, size):
                mask = 0
                for u in subset:
                    mask |= 1 << u
                # a maximum-degree vertex inside S would outgrow the new vertex
                if size == dmax and any(degs[u] == dmax for u in subset):
                    continue
                if not _orbit_minimal(mask, gens):
                    continue
                result = self._accept(adj, degs, mask, size, need_gens)
                if result is not None:
                    yield result

    def _accept(self, adj, degs, mask, size, need_gens):
        k = len(adj)
        child = [r | (1 << k) if mask >> u & 1 else r for u, r in enumerate(adj)]
        child.append(mask)
        cdeg = [d + 1 if mask >> u & 1 else d for u, d in enumerate(degs)]
        cdeg.append(size)
        top = [u for u in range(k + 1) if cdeg[u] == size]
        if len(top) == 1:
            return child, (self._gens(child, cdeg, size) if need_gens else None)
        # break ties by the degree sum over the neighbourhood
        score = {u: sum(cdeg[w] for w in iter_bits(child[u])) for u in top}
        best = max(score.values())
        if score[k] != best:
            return None
        cands = [u for u in top if score[u] == best]
        if len(cands) == 1:
            return child, (self._gens(child, cdeg, size) if need_gens else None)
        colors = _colors(child, cdeg, size, score, best)
        res = canonize(Graph._trusted(k + 1, child), colors)
        lab = res.labeling
        m = min(cands, key=lambda u: lab[u])
        if res.orbits[m] != res.orbits[k]:
            return None
        return child, res.generators

    def _gens(self, child, cdeg, size):
        score = {u: sum(cdeg[w] for w in iter_bits(child[u])) for u in range(len(child)) if cdeg[u] == size}
        best = max(score.values())
        return canonize(Graph._trusted(len(child), child), _colors(child, cdeg, size, score, best)).generators

    def walk(self, adj: list[int], gens, stop_at: int) -> Iterator[list[int]]:
        """All descendants of ``adj`` (inclusive) having ``stop_at`` vertices."""
        if len(adj) == stop_at:
            yield adj
            return
        for child, child_gens in self.children(adj, gens):
            yield from self.walk(child, child_gens, stop_at)


def _colors(child, cdeg, size, score, best):
    # isomorphism-invariant vertex colouring; deletion candidates first
    return [
        (0,) if cdeg[u] == size and score.get(u) == best else (1, -cdeg[u])
        for u in range(len(child))
    ]


def _emit(rows: list[int], config: EnumerationConfig) -> Graph | None:
    g = Graph._trusted(len(rows), rows)
    target = config.generation_edge_count
    if target is not None and g.edge_count() != target:
        return None
    if config.complemented:
        g = complement(g)
    if config.connected_only and not is_connected(g):
        return None
    return g


def _root_gens(rows: list[int]) -> tuple:
    return canonize(Graph._trusted(len(rows), rows)).generators if rows else ()


def enumerate_graphs(config: EnumerationConfig) -> Iterator[Graph]:
    """One graph per isomorphism class satisfying ``config``, in a fixed order."""
    for task in split_tasks(config, 0):
        yield from run_task(task)


def split_tasks(config: EnumerationConfig, depth: int) -> list[EnumerationTask]:
    """Independent work units: the grown graphs on ``depth`` vertices."""
    if not 0 <= depth <= max(config.n, 0):
        raise ValueError(f"depth must lie in 0..n, got {depth}")
    gen = _Generator(config.n, config.generation_max_degree, config.generation_edge_count)
    return [EnumerationTask(graph6_encode(Graph._trusted(depth, rows)), config)
            for rows in gen.walk([], (), depth)]


def run_task(task: EnumerationTask) -> Iterator[Graph]:
    config = task.config
    rows = list(task.prefix_graph.adj)
    gen = _Generator(config.n, config.generation_max_degree, config.generation_edge_count)
    for leaf in gen.walk(rows, _root_gens(rows), config.n):
        g = _emit(leaf, config)
        if g is not None:
            yield g
