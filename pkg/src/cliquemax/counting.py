"""Exact clique and independent-set counts, plus the counting identities.

The fast counters recurse on intersections of neighbour bitmasks along a
degeneracy order, so each clique is reached exactly once from its
earliest vertex.  :func:`count_cliques_naive` walks every vertex subset and
is kept as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .graph import Graph, complement, induced_subgraph, iter_bits

__all__ = [
    "CliqueProfile",
    "degeneracy_order",
    "clique_counts",
    "count_cliques",
    "count_cliques_naive",
    "clique_profile",
    "count_independent_sets",
    "triangle_complement_identity",
    "k3_upper_bound",
    "extremal_value_cliques",
    "extremal_value_independent",
    "closed_form_equality_check",
    "degree_double_count_bound",
]


def degeneracy_order(g: Graph) -> list[int]:
    """Repeatedly remove a minimum-degree vertex (ties to the lowest label)."""
    remaining = g.vertex_mask
    order = []
    for _ in range(g.n):
        best = min(iter_bits(remaining), key=lambda v: (g.adj[v] & remaining).bit_count())
        order.append(best)
        remaining &= ~(1 << best)
    return order


def _forward_masks(g: Graph) -> list[int]:
    """For each vertex, its neighbours that come later in the degeneracy order."""
    later = g.vertex_mask
    fwd = [0] * g.n
    for v in degeneracy_order(g):
        later &= ~(1 << v)
        fwd[v] = g.adj[v] & later
    return fwd


def clique_counts(g: Graph, t_max: int | None = None) -> list[int]:
    """``[k_0, k_1, ..., k_w]`` where ``w`` is the clique number (or ``t_max``)."""
    if t_max is None:
        t_max = g.n
    counts = [0] * (t_max + 1)
    counts[0] = 1
    if t_max == 0 or g.n == 0:
        return counts
    adj = g.adj
    fwd = _forward_masks(g)

    def extend(cand: int, size: int) -> None:
        # every clique of the current prefix extended by one candidate
        counts[size + 1] += cand.bit_count()
        if size + 1 == t_max:
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            nxt = cand & adj[v]
            if nxt:
                extend(nxt, size + 1)

    for v in range(g.n):
        counts[1] += 1
        if t_max > 1 and fwd[v]:
            extend(fwd[v], 1)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def count_cliques(g: Graph, t: int) -> int:
    """``k_t(G)``; ``k_0 = 1`` by convention (the empty clique)."""
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    if t > g.n:
        return 0
    counts = clique_counts(g, t)
    return counts[t] if t < len(counts) else 0


def count_cliques_naive(g: Graph, t: int) -> int:
    """Oracle: test every ``t``-subset of the vertices."""
    total = 0
    for subset in combinations(range(g.n), t):
        if all(g.adj[u] >> v & 1 for u, v in combinations(subset, 2)):
            total += 1
    return total


@dataclass(frozen=True)
class CliqueProfile:
    t: int
    per_vertex: tuple[int, ...]
    total: int

    def __post_init__(self):
        if sum(self.per_vertex) != self.t * self.total:
            raise ValueError("handshake identity violated")


def clique_profile(g: Graph, t: int) -> CliqueProfile:
    """Per-vertex counts ``k_t(v)``, each the ``(t-1)``-cliques of ``G[N(v)]``."""
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    per_vertex = tuple(count_cliques(induced_subgraph(g, g.adj[v]), t - 1) for v in range(g.n))
    return CliqueProfile(t, per_vertex, count_cliques(g, t))


def count_independent_sets(g: Graph, t: int) -> int:
    """``i_t(G)``, counted as cliques of the complement."""
    return count_cliques(complement(g), t)


def triangle_complement_identity(g: Graph) -> tuple[int, int, bool]:
    """Both sides of ``2[C(n,3) - k3(G) - k3(~G)] = sum_v d(v)(n-1-d(v))``.

    The left side comes from two clique counts, the right from degrees only.
    """
    n = g.n
    lhs = 2 * (comb(n, 3) - count_cliques(g, 3) - count_cliques(complement(g), 3))
    rhs = sum(d * (n - 1 - d) for d in g.degrees())
    return lhs, rhs, lhs == rhs


def k3_upper_bound(g: Graph) -> Fraction:
    """``C(n,3) - 1/2 sum_v d(v)(n-1-d(v))``; tight iff the complement is triangle-free."""
    n = g.n
    return comb(n, 3) - Fraction(sum(d * (n - 1 - d) for d in g.degrees()), 2)


def _require_nonnegative(**params: int) -> None:
    for name, value in params.items():
        if value < 0:
            raise ValueError(f"{name} must be nonnegative, got {value}")


def extremal_value_cliques(max_deg: int, b: int, t: int, a: int = 1) -> int:
    """``a C(max_deg+1, t) + C(b, t)``: clique count of ``a K_{max_deg+1} + K_b``."""
    _require_nonnegative(max_deg=max_deg, b=b, t=t, a=a)
    return a * comb(max_deg + 1, t) + comb(b, t)


def extremal_value_independent(n: int, min_deg: int, t: int) -> int:
    """``C(min_deg, t) + C(n - min_deg, t)``: independent ``t``-sets of ``K_{min_deg, n-min_deg}``."""
    _require_nonnegative(n=n, min_deg=min_deg, t=t)
    if min_deg > n:
        raise ValueError(f"min degree {min_deg} exceeds n={n}")
    return comb(min_deg, t) + comb(n - min_deg, t)


def closed_form_equality_check(max_deg: int, b: int, t: int) -> bool:
    """``(D+1) C(D, t-1) + b C(b-1, t-1) == t C(D+1, t) + t C(b, t)`` with ``D = max_deg``."""
    _require_nonnegative(max_deg=max_deg, b=b)
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    # b = 0 contributes 0 * C(-1, t-1) = 0 on the left
    left = (max_deg + 1) * comb(max_deg, t - 1) + (b * comb(b - 1, t - 1) if b else 0)
    right = t * comb(max_deg + 1, t) + t * comb(b, t)
    return left == right


def degree_double_count_bound(n: int, max_deg: int, t: int) -> Fraction:
    """``(n/t) C(max_deg, t-1)``: summing ``k_t(v) <= C(d(v), t-1)`` over vertices."""
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    _require_nonnegative(n=n, max_deg=max_deg)
    return Fraction(n, t) * comb(max_deg, t - 1)
