"""Real-argument Kruskal-Katona bounds and the per-vertex bound function.

A graph with ``C(x, 2)`` edges has at most ``C(x, k)`` cliques of order
``k`` (real ``x >= k - 1``).  Writing ``u(m)`` for the root of
``C(u, 2) = m``, the bound on ``k``-cliques among ``m`` edges is
``C(u(m), k)``, and the bound on the ``t``-cliques through a vertex whose
neighbourhood spans ``x`` edges is ``f_t(x) = C(u(x), t - 1)`` (zero once
``u(x) < t - 2``).  All values are exact quadratic numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod, sqrt
from typing import Sequence

from .algebra import QuadraticNumber, compare, gen_binomial, sign_of_sum, u_of, Order
from .counting import clique_profile, count_cliques
from .enumeration import EnumerationConfig, enumerate_graphs
from .graph import Graph

KK_ORACLE_MAX_VERTICES = 10


@dataclass(frozen=True)
class FtBound:
    t: int
    x: Fraction
    value: QuadraticNumber
    branch: str  # "zero" or "kk"

    def __post_init__(self):
        if self.branch not in ("zero", "kk"):
            raise ValueError(f"unknown branch {self.branch!r}")


@lru_cache(maxsize=65536)
def _f_t(x: Fraction, t: int) -> FtBound:
    u = u_of(x)
    if compare(u, t - 2) is Order.LESS:
        return FtBound(t, x, QuadraticNumber(0), "zero")
    return FtBound(t, x, gen_binomial(u, t - 1), "kk")


def f_t(x, t: int) -> FtBound:
    """Bound on ``k_t(v)`` given ``k_3(v) = x``."""
    if t < 3:
        raise ValueError(f"f_t is defined for t >= 3, got {t}")
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"x must be nonnegative, got {x}")
    return _f_t(x, t)


def kk_clique_bound(m: int, k: int) -> QuadraticNumber:
    """``C(u(m), k)``, or 0 when ``u(m) < k - 1`` (no ``k``-clique fits)."""
    if k < 3:
        raise ValueError(f"the bound is stated for k >= 3, got {k}")
    if m < 0:
        raise ValueError(f"edge count must be nonnegative, got {m}")
    return f_t(m, k + 1).value


def kk_oracle(m: int, k: int, n_max: int) -> int:
    """Largest ``k_k`` over graphs with exactly ``m`` edges and at most ``n_max`` vertices.

    Smaller graphs are covered by padding with isolated vertices, so it is
    enough to run over ``n_max``-vertex classes.
    """
    if not 1 <= n_max <= KK_ORACLE_MAX_VERTICES:
        raise ValueError(f"n_max must lie in 1..{KK_ORACLE_MAX_VERTICES}, got {n_max}")
    if not 0 <= m <= comb(n_max, 2):
        raise ValueError(f"no graph on {n_max} vertices has {m} edges")
    return max(count_cliques(g, k) for g in enumerate_graphs(EnumerationConfig(n_max, edge_count=m)))


def kk_oracle_table(n_max: int, ks: Sequence[int]) -> dict[tuple[int, int], int]:
    """``kk_oracle(m, k, n_max)`` for every feasible ``m`` and each ``k``, from one pass."""
    if not 1 <= n_max <= KK_ORACLE_MAX_VERTICES:
        raise ValueError(f"n_max must lie in 1..{KK_ORACLE_MAX_VERTICES}, got {n_max}")
    table: dict[tuple[int, int], int] = {}
    for g in enumerate_graphs(EnumerationConfig(n_max)):
        m = g.edge_count()
        for k in ks:
            c = count_cliques(g, k)
            if c > table.get((m, k), -1):
                table[m, k] = c
    return table


def f_t_derivative(x: float, t: int) -> float:
    """Float derivative of ``f_t`` on the ``kk`` branch, by the product rule.

    Display and cross-checking only.
    """
    root = sqrt(1 + 8 * x)
    u = (1 + root) / 2
    du = 2 / root
    factors = [u - i for i in range(t - 1)]
    total = sum(prod(factors[:j] + factors[j + 1:]) for j in range(t - 1))
    return du * total / factorial(t - 1)


@dataclass
class ConvexityReport:
    t: int
    grid_size: int
    strict_above: Fraction
    convex: bool = True
    strictly_convex_above: bool = True
    monotone: bool = True
    strictly_increasing_above: bool = True
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.convex and self.strictly_convex_above and self.monotone and self.strictly_increasing_above


def f_t_convexity_check(t: int, grid: Sequence, strict_above=None) -> ConvexityReport:
    """Check discrete convexity and monotonicity of ``f_t`` along ``grid``.

    For consecutive points ``x0 < x1 < x2`` the slopes must not decrease,
    i.e. ``(x2 - x1)(f1 - f0) <= (x1 - x0)(f2 - f1)``, strictly once
    ``x1 > strict_above`` (default ``C(t-2, 2)``).  Consecutive values must
    not decrease, strictly once the right point exceeds ``C(t-2, 2)``.
    Terms from different quadratic fields are compared by
    :func:`cliquemax.algebra.sign_of_sum`.
    """
    xs = [Fraction(x) for x in grid]
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise ValueError("grid must be strictly ascending")
    knee = Fraction(comb(t - 2, 2))
    strict_above = knee if strict_above is None else Fraction(strict_above)
    report = ConvexityReport(t, len(xs), strict_above)
    fs = [f_t(x, t).value for x in xs]
    for i in range(len(xs) - 1):
        s = sign_of_sum([fs[i + 1], -fs[i]])
        if s < 0:
            report.monotone = False
            report.failures.append(f"decrease between x={xs[i]} and x={xs[i + 1]}")
        elif s == 0 and xs[i + 1] > knee:
            report.strictly_increasing_above = False
            report.failures.append(f"flat between x={xs[i]} and x={xs[i + 1]}")
    for i in range(1, len(xs) - 1):
        left, right = xs[i] - xs[i - 1], xs[i + 1] - xs[i]
        s = sign_of_sum([left * fs[i + 1], -left * fs[i], -right * fs[i], right * fs[i - 1]])
        if s < 0:
            report.convex = False
            report.failures.append(f"concave at x={xs[i]}")
        elif s == 0 and xs[i] > strict_above:
            report.strictly_convex_above = False
            report.failures.append(f"not strictly convex at x={xs[i]}")
    return report


def vertex_clique_bound_check(g: Graph, t: int) -> bool:
    """``k_t(v) <= f_t(k_3(v))`` at every vertex, compared exactly."""
    if t < 3:
        raise ValueError(f"t must be at least 3, got {t}")
    k3 = clique_profile(g, 3).per_vertex
    kt = k3 if t == 3 else clique_profile(g, t).per_vertex
    return all(compare(c, f_t(x, t).value) is not Order.GREATER for c, x in zip(kt, k3))
