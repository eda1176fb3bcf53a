"""The convexity smoothing that reduces per-vertex triangle counts to extremes.

Given values ``x_i`` in ``[lo, hi] = [C(b-1,2), C(D,2)]`` whose sum is at
most ``3 C(D+1,3) + 3 C(b,3)``, first raise entries until the sum cap is met,
then repeatedly push two interior entries apart (conserving their sum).
Since ``f_t`` is convex and nondecreasing the objective ``sum f_t(x_i)``
never drops, and the process ends with ``D+1`` entries at ``hi`` and ``b``
at ``lo``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .algebra import RadicalSum
from .kkbounds import f_t


class InfeasibleState(ValueError):
    pass


class EndpointPreconditionError(ValueError):
    """The input to :func:`endpoint_lemma_check` does not meet its hypotheses."""


class EndpointLemmaViolation(AssertionError):
    """Hypotheses held but the conclusion failed; this is a bug."""


@dataclass
class SmoothingState:
    xs: list[Fraction]
    lo: Fraction
    hi: Fraction
    target_sum: Fraction
    objective_t: int

    @classmethod
    def for_class(cls, max_deg: int, b: int, t: int, xs: Sequence) -> "SmoothingState":
        """State with the bounds implied by ``(max_deg, b)``."""
        if not 1 <= b <= max_deg:
            raise InfeasibleState(f"need 1 <= b <= Delta for a nondegenerate interval, got b={b}, Delta={max_deg}")
        if len(xs) != max_deg + 1 + b:
            raise InfeasibleState(f"expected {max_deg + 1 + b} values, got {len(xs)}")
        return cls(
            xs=[Fraction(x) for x in xs],
            lo=Fraction(comb(b - 1, 2)),
            hi=Fraction(comb(max_deg, 2)),
            target_sum=Fraction(3 * comb(max_deg + 1, 3) + 3 * comb(b, 3)),
            objective_t=t,
        )


@dataclass
class SmoothingResult:
    final_xs: list[Fraction]
    objective_trace: list[RadicalSum]
    raise_steps: int
    push_steps: int
    monotone: bool = True
    at_hi: int = 0
    at_lo: int = 0
    notes: list[str] = field(default_factory=list)


def objective(xs: Sequence[Fraction], t: int) -> RadicalSum:
    return RadicalSum(f_t(x, t).value for x in xs)


def smooth_to_extreme(state: SmoothingState) -> SmoothingResult:
    xs = list(state.xs)
    lo, hi, t = state.lo, state.hi, state.objective_t
    if lo >= hi:
        raise InfeasibleState(f"empty interval [{lo}, {hi}]")
    if any(not lo <= x <= hi for x in xs):
        raise InfeasibleState("every entry must lie in [lo, hi]")
    total = sum(xs)
    if total > state.target_sum:
        raise InfeasibleState(f"sum {total} exceeds the cap {state.target_sum}")
    if state.target_sum > len(xs) * hi:
        raise InfeasibleState(f"cap {state.target_sum} exceeds n*hi = {len(xs) * hi}")

    trace = [objective(xs, t)]
    monotone = True

    def record():
        nonlocal monotone
        trace.append(objective(xs, t))
        if trace[-1] < trace[-2]:
            monotone = False

    # raise entries in index order until the cap is met
    deficit = state.target_sum - total
    raises = 0
    for i in range(len(xs)):
        if deficit == 0:
            break
        step = min(hi - xs[i], deficit)
        if step > 0:
            xs[i] += step
            deficit -= step
            raises += 1
            record()

    # push the extreme interior pair apart until at most one entry is interior
    pushes = 0
    while True:
        interior = [i for i, x in enumerate(xs) if lo < x < hi]
        if len(interior) < 2:
            break
        up = max(interior, key=lambda i: (xs[i], -i))
        down = min((i for i in interior if i != up), key=lambda i: (xs[i], i))
        step = min(hi - xs[up], xs[down] - lo)
        xs[up] += step
        xs[down] -= step
        pushes += 1
        record()

    return SmoothingResult(
        final_xs=xs,
        objective_trace=trace,
        raise_steps=raises,
        push_steps=pushes,
        monotone=monotone,
        at_hi=sum(1 for x in xs if x == hi),
        at_lo=sum(1 for x in xs if x == lo),
    )


def extreme_objective(max_deg: int, b: int, t: int) -> int:
    """``t C(D+1, t) + t C(b, t)``, the objective at the extreme configuration."""
    return t * comb(max_deg + 1, t) + t * comb(b, t)


def random_state(max_deg: int, b: int, t: int, rng: random.Random, denominator: int = 12) -> SmoothingState:
    """Random state with entries strictly inside ``(lo, hi)`` and sum under the cap."""
    n = max_deg + 1 + b
    lo, hi = Fraction(comb(b - 1, 2)), Fraction(comb(max_deg, 2))
    cap = Fraction(3 * comb(max_deg + 1, 3) + 3 * comb(b, 3))
    span = int((hi - lo) * denominator)
    xs = [lo + Fraction(rng.randint(1, span - 1), denominator) for _ in range(n)]
    excess = sum(xs) - cap
    if excess > 0:
        # shrink toward lo; the factor keeps entries strictly above lo
        shrink = (cap - n * lo) / (sum(xs) - n * lo) * Fraction(rng.randint(50, 99), 100)
        xs = [lo + (x - lo) * shrink for x in xs]
    return SmoothingState.for_class(max_deg, b, t, xs)


def endpoint_lemma_check(ys: Sequence, k: int) -> bool:
    """Reals in ``[0, 1]`` summing to the integer ``k``, all but one at an endpoint,
    are in fact all endpoints with exactly ``k`` ones."""
    ys = [Fraction(y) for y in ys]
    if any(not 0 <= y <= 1 for y in ys):
        raise EndpointPreconditionError("values must lie in [0, 1]")
    if sum(ys) != k:
        raise EndpointPreconditionError(f"values sum to {sum(ys)}, not {k}")
    interior = [y for y in ys if 0 < y < 1]
    if len(interior) > 1:
        raise EndpointPreconditionError(f"{len(interior)} values are interior; at most one is allowed")
    if interior or sum(1 for y in ys if y == 1) != k:
        raise EndpointLemmaViolation(f"conclusion fails for {ys}")
    return True
