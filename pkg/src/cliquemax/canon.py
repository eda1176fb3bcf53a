"""Canonical labelling of small graphs by refinement and backtracking.

The search individualises one vertex at a time, refines to an equitable
ordered partition, and takes the lexicographically smallest relabelled
adjacency matrix over all discrete leaves.  Leaves that reproduce the first
or the best relabelled graph yield automorphisms; those prune the tree (the
usual first-path orbit pruning plus backjumping), and the collected
generators give the vertex orbits of the automorphism group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, iter_bits

CANON_MAX_VERTICES = 16


class CanonSizeError(ValueError):
    pass


def _refine(adj: Sequence[int], cells: list[list[int]], queue: list[list[int]]) -> list[list[int]]:
    """Refine ``cells`` to the coarsest equitable partition finer than it.

    Splitting is by neighbour count into the current splitter cell, fragments
    ordered by increasing count, so the result depends only on the labelled
    structure and commutes with relabelling.
    """
    queued = {id(c) for c in queue}
    while queue:
        w = queue.pop(0)
        queued.discard(id(w))
        wmask = 0
        for x in w:
            wmask |= 1 << x
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            counts = [(adj[x] & wmask).bit_count() for x in cell]
            first = counts[0]
            if all(c == first for c in counts):
                i += 1
                continue
            buckets: dict[int, list[int]] = {}
            for x, c in zip(cell, counts):
                buckets.setdefault(c, []).append(x)
            frags = [buckets[c] for c in sorted(buckets)]
            cells[i:i + 1] = frags
            if id(cell) in queued:
                queued.discard(id(cell))
                queue[:] = [c for c in queue if c is not cell]
                add = frags
            else:
                largest = max(range(len(frags)), key=lambda j: (len(frags[j]), -j))
                add = [f for j, f in enumerate(frags) if j != largest]
            for f in add:
                queue.append(f)
                queued.add(id(f))
            i += len(frags)
    return cells


def _leaf_graph(adj: Sequence[int], cells: list[list[int]]) -> tuple[tuple[int, ...], list[int]]:
    """Relabelled adjacency rows and the labelling ``vertex -> label``."""
    n = len(adj)
    label = [0] * n
    for i, cell in enumerate(cells):
        label[cell[0]] = i
    rows = [0] * n
    for v in range(n):
        r = 0
        for u in iter_bits(adj[v]):
            r |= 1 << label[u]
        rows[label[v]] = r
    return tuple(rows), label


class _Orbits:
    """Union-find over vertices."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if rx < ry:
                self.parent[ry] = rx
            else:
                self.parent[rx] = ry

    def add_perm(self, perm: Sequence[int]) -> None:
        for v, w in enumerate(perm):
            self.union(v, w)


@dataclass(frozen=True)
class CanonResult:
    labeling: tuple[int, ...]      # vertex -> canonical label
    canonical: Graph                # graph relabelled by ``labeling``
    generators: tuple[tuple[int, ...], ...]
    orbits: tuple[int, ...]         # orbit representative (least vertex) per vertex

    @property
    def key(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.canonical.n, 0, self.canonical.adj)


class _Search:
    def __init__(self, adj: Sequence[int]):
        self.adj = adj
        self.n = len(adj)
        self.first: tuple[int, ...] | None = None
        self.first_label: list[int] | None = None
        self.first_path: list[int] = []
        self.best: tuple[int, ...] | None = None
        self.best_label: list[int] | None = None
        self.best_path: list[int] = []
        self.generators: list[tuple[int, ...]] = []

    def _automorphism(self, label_a: list[int], label_b: list[int]) -> tuple[int, ...]:
        # v -> the vertex that b places where a placed v
        inv_b = [0] * self.n
        for v, lab in enumerate(label_b):
            inv_b[lab] = v
        return tuple(inv_b[label_a[v]] for v in range(self.n))

    def run(self, cells: list[list[int]]) -> None:
        self._node(cells, [])

    def _stabiliser_orbits(self, prefix: list[int]) -> _Orbits:
        orb = _Orbits(self.n)
        for g in self.generators:
            if all(g[v] == v for v in prefix):
                orb.add_perm(g)
        return orb

    def _node(self, cells: list[list[int]], path: list[int]) -> int | None:
        """Explore below ``path``; returns a level to jump back to, or None."""
        n = self.n
        if len(cells) == n:
            return self._leaf(cells, path)
        target_idx = min(
            (i for i, c in enumerate(cells) if len(c) > 1),
            key=lambda i: (len(cells[i]), i),
        )
        target = cells[target_idx]
        level = len(path)
        on_first_path = self.first is None or path == self.first_path[:level]
        explored: list[int] = []
        for v in sorted(target):
            if on_first_path and explored and self.first is not None:
                orb = self._stabiliser_orbits(path)
                rv = orb.find(v)
                if any(orb.find(w) == rv for w in explored):
                    continue
            explored.append(v)
            rest = [x for x in target if x != v]
            child = [list(c) for c in cells[:target_idx]] + [[v], rest] + [list(c) for c in cells[target_idx + 1:]]
            single = child[target_idx]
            _refine(self.adj, child, [single])
            jump = self._node(child, path + [v])
            if jump is not None and jump < level:
                return jump
        return None

    def _leaf(self, cells: list[list[int]], path: list[int]) -> int | None:
        rows, label = _leaf_graph(self.adj, cells)
        if self.first is None:
            self.first, self.first_label, self.first_path = rows, label, list(path)
            self.best, self.best_label, self.best_path = rows, label, list(path)
            return None
        if rows == self.first:
            self.generators.append(self._automorphism(self.first_label, label))
            return _common_prefix(path, self.first_path)
        if rows == self.best:
            self.generators.append(self._automorphism(self.best_label, label))
            return _common_prefix(path, self.best_path)
        if rows < self.best:
            self.best, self.best_label, self.best_path = rows, label, list(path)
        return None


def _common_prefix(a: list[int], b: list[int]) -> int:
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def initial_cells(n: int, colors: Sequence | None) -> list[list[int]]:
    if colors is None:
        return [list(range(n))] if n else []
    groups: dict = {}
    for v, c in enumerate(colors):
        groups.setdefault(c, []).append(v)
    return [groups[c] for c in sorted(groups)]


def canonize(g: Graph, colors: Sequence | None = None) -> CanonResult:
    """Canonical labelling, automorphism generators and orbits of ``g``.

    ``colors`` (one sortable value per vertex) restricts isomorphisms to
    colour-preserving ones; colour classes keep their sorted order.
    """
    n = g.n
    if n > CANON_MAX_VERTICES:
        raise CanonSizeError(f"canonical forms are limited to {CANON_MAX_VERTICES} vertices, got {n}")
    if n == 0:
        return CanonResult((), g, (), ())
    cells = initial_cells(n, colors)
    _refine(g.adj, cells, list(cells))
    search = _Search(g.adj)
    search.run(cells)
    orb = _Orbits(n)
    for gen in search.generators:
        orb.add_perm(gen)
    label = search.best_label
    return CanonResult(
        labeling=tuple(label),
        canonical=Graph._trusted(n, search.best),
        generators=tuple(search.generators),
        orbits=tuple(orb.find(v) for v in range(n)),
    )


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism certificate: the graph6 bytes of the canonical relabelling."""

    certificate: bytes


def canonical_form(g: Graph) -> CanonicalForm:
    from .graph6 import graph6_encode

    return CanonicalForm(graph6_encode(canonize(g).canonical).encode("ascii"))


def certificate_key(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Hashable certificate, cheaper than :func:`canonical_form` for set membership."""
    return g.n, canonize(g).canonical.adj


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.edge_count() == h.edge_count() and certificate_key(g) == certificate_key(h)
