"""Exact arithmetic in real quadratic fields Q(sqrt d).

Every Kruskal-Katona style bound evaluated at an integer (or rational) edge
count lives in Q(sqrt(1 + 8x)), so comparisons against integer clique counts
can be decided exactly.  Rationals are :class:`fractions.Fraction`.

Sums whose terms live in *different* quadratic fields are handled by
:func:`sign_of_sum`, which groups terms by field and then brackets the
remaining square roots with integer square roots until the sign is certain.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import comb, factorial, isqrt
from numbers import Rational
from typing import Iterable, Union

__all__ = [
    "Order",
    "IncompatibleRadicands",
    "QuadraticNumber",
    "binomial",
    "gen_binomial",
    "u_of",
    "compare",
    "RadicalSum",
    "sign_of_sum",
    "compare_sums",
]


class Order(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def from_sign(cls, s: int) -> "Order":
        return cls((s > 0) - (s < 0))


class IncompatibleRadicands(ValueError):
    """Two quadratic numbers do not share a field Q(sqrt d)."""


def _sign(x) -> int:
    return (x > 0) - (x < 0)


class QuadraticNumber:
    """The real number ``a + b*sqrt(d)`` with rational ``a, b`` and integer ``d >= 0``.

    Perfect-square radicands are folded into ``a``; a rational value is stored
    with ``b == 0`` and ``d == 0``.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 0):
        a, b = Fraction(a), Fraction(b)
        if d < 0:
            raise ValueError(f"radicand must be nonnegative, got {d}")
        if b and d:
            r = isqrt(d)
            if r * r == d:
                a, b, d = a + b * r, Fraction(0), 0
        else:
            b, d = Fraction(0), 0
        self.a, self.b, self.d = a, b, d

    @classmethod
    def coerce(cls, x) -> "QuadraticNumber":
        if isinstance(x, QuadraticNumber):
            return x
        if isinstance(x, (int, Rational)):
            return cls(x)
        raise TypeError(f"cannot convert {type(x).__name__} to QuadraticNumber")

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.a

    def _align(self, other: "QuadraticNumber") -> tuple[Fraction, Fraction, Fraction, Fraction, int]:
        """Express both numbers over one radicand: returns (a1, b1, a2, b2, d)."""
        if other.is_rational or self.d == other.d:
            return self.a, self.b, other.a, other.b, self.d or other.d
        if self.is_rational:
            return self.a, self.b, other.a, other.b, other.d
        prod = self.d * other.d
        r = isqrt(prod)
        if r * r != prod:
            raise IncompatibleRadicands(f"sqrt({self.d}) and sqrt({other.d}) lie in different fields")
        # sqrt(d2) = r / sqrt(d1) = (r / d1) sqrt(d1)
        return self.a, self.b, other.a, other.b * Fraction(r, self.d), self.d

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        a1, b1, a2, b2, d = self._align(other)
        return QuadraticNumber(a1 + a2, b1 + b2, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        a1, b1, a2, b2, d = self._align(other)
        return QuadraticNumber(a1 * a2 + b1 * b2 * d, a1 * b2 + a2 * b1, d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def __truediv__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_rational:
            if other.a == 0:
                raise ZeroDivisionError("division by zero")
            return QuadraticNumber(self.a / other.a, self.b / other.a, self.d)
        return self * other.conjugate() / other.norm()

    def __rtruediv__(self, other):
        return QuadraticNumber.coerce(other) / self

    # -- ordering -----------------------------------------------------------
    def sign(self) -> int:
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return _sign(a)
        if a >= 0 and b > 0:
            return 1
        if a <= 0 and b < 0:
            return -1
        # a and b*sqrt(d) have opposite signs: the larger magnitude wins
        return _sign(a) * _sign(a * a - b * b * d)

    def __eq__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        try:
            return (self - other).sign() == 0
        except IncompatibleRadicands:
            return sign_of_sum([self, -other]) == 0

    def __hash__(self):
        if self.is_rational:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def _cmp(self, other) -> int:
        return sign_of_sum([self, -QuadraticNumber.coerce(other)])

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __float__(self):
        # display only; decisions go through sign()
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self):
        if self.is_rational:
            return f"QuadraticNumber({self.a})"
        return f"QuadraticNumber({self.a} + {self.b}*sqrt({self.d}))"

    def __str__(self):
        if self.is_rational:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.d})"

    def to_triple(self) -> tuple[str, str, str]:
        return str(self.a), str(self.b), str(self.d)

    @classmethod
    def from_triple(cls, triple: Iterable[str]) -> "QuadraticNumber":
        a, b, d = triple
        return cls(Fraction(a), Fraction(b), int(d))


Number = Union[int, Fraction, QuadraticNumber]


def binomial(n: int, k: int) -> int:
    """Integer binomial coefficient, zero when ``0 <= n < k``."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if n >= 0:
        return comb(n, k)
    # falling-factorial definition for negative upper argument
    return int(gen_binomial(n, k).rational())


def gen_binomial(x: Number, k: int) -> QuadraticNumber:
    """``x (x-1) ... (x-k+1) / k!`` computed exactly."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    x = QuadraticNumber.coerce(x)
    prod = QuadraticNumber(1)
    for i in range(k):
        prod = prod * (x - i)
    return prod / factorial(k)


def u_of(x) -> QuadraticNumber:
    """Positive root of ``C(u, 2) = x``, i.e. ``(1 + sqrt(1 + 8x)) / 2``."""
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"u(x) needs x >= 0, got {x}")
    disc = 1 + 8 * x
    num, den = disc.numerator, disc.denominator
    # sqrt(num/den) = sqrt(num*den) / den
    return QuadraticNumber(Fraction(1, 2), Fraction(1, 2 * den), num * den)


def compare(p: Number, q: Number) -> Order:
    """Exact ordering of ``p`` and ``q``; they must share a quadratic field."""
    p, q = QuadraticNumber.coerce(p), QuadraticNumber.coerce(q)
    return Order.from_sign((p - q).sign())


# -- sums across different quadratic fields -----------------------------------

class RadicalSum:
    """Exact finite sum ``r + sum_g c_g sqrt(D_g)`` of quadratic numbers.

    Terms are merged whenever their radicands share a field (``D_1 D_2`` a
    perfect square), so the surviving radicands have pairwise distinct
    square-free parts.  Together with 1 those square roots are linearly
    independent over Q: the sum vanishes iff every coefficient does.  A
    nonzero sum is bracketed with ever finer integer square roots until its
    sign is fixed.
    """

    __slots__ = ("rational", "groups")

    def __init__(self, terms: Iterable[Number] = ()):
        self.rational = Fraction(0)
        self.groups: list[list] = []  # [coefficient, radicand]
        for t in terms:
            self.add(t)

    def add(self, term: Number) -> None:
        t = QuadraticNumber.coerce(term)
        self.rational += t.a
        if t.is_rational:
            return
        for g in self.groups:
            p = g[1] * t.d
            r = isqrt(p)
            if r * r == p:
                g[0] += t.b * Fraction(r, g[1])
                return
        self.groups.append([t.b, t.d])

    def copy(self) -> "RadicalSum":
        out = RadicalSum()
        out.rational = self.rational
        out.groups = [list(g) for g in self.groups]
        return out

    def __add__(self, other):
        out = self.copy()
        if isinstance(other, RadicalSum):
            out.rational += other.rational
            for c, d in other.groups:
                out.add(QuadraticNumber(0, c, d))
        else:
            out.add(other)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = RadicalSum()
        out.rational = -self.rational
        out.groups = [[-c, d] for c, d in self.groups]
        return out

    def __sub__(self, other):
        if isinstance(other, RadicalSum):
            return self + (-other)
        return self + (-QuadraticNumber.coerce(other))

    def sign(self) -> int:
        rational = self.rational
        groups = [(c, d) for c, d in self.groups if c != 0]
        if not groups:
            return _sign(rational)
        if len(groups) == 1:
            c, d = groups[0]
            return QuadraticNumber(rational, c, d).sign()
        bits = 32
        while True:
            scale = 1 << bits
            lo = hi = rational
            for c, d in groups:
                s = isqrt(d * scale * scale)  # s <= sqrt(d)*scale < s+1
                low, high = Fraction(s, scale), Fraction(s + 1, scale)
                if c > 0:
                    lo += c * low
                    hi += c * high
                else:
                    lo += c * high
                    hi += c * low
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def _cmp(self, other) -> int:
        return (self - other).sign()

    def __eq__(self, other):
        if not isinstance(other, (RadicalSum, QuadraticNumber, int, Rational)):
            return NotImplemented
        return self._cmp(other) == 0

    __hash__ = None

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __float__(self):
        return float(self.rational) + sum(float(c) * d ** 0.5 for c, d in self.groups)

    def __repr__(self):
        parts = [str(self.rational)] + [f"{c}*sqrt({d})" for c, d in self.groups if c]
        return f"RadicalSum({' + '.join(parts)})"


def sign_of_sum(terms: Iterable[Number]) -> int:
    """Exact sign of a finite sum of quadratic numbers from arbitrary fields."""
    return RadicalSum(terms).sign()


def compare_sums(lhs: Iterable[Number], rhs: Iterable[Number]) -> Order:
    """Exact ordering of ``sum(lhs)`` against ``sum(rhs)``."""
    return Order.from_sign(sign_of_sum(list(lhs) + [-QuadraticNumber.coerce(t) for t in rhs]))
