"""Exact scalars of the form ``a + b*sqrt(d)`` with a single radicand.

Only the operations the verdict pipeline needs are supported: addition of
rationals or same-radicand surds, rational scaling, same-radicand products,
exact comparison, and integrality tests.  Mixing two different radicands
raises :class:`MixedRadicandError`.
"""

from __future__ import annotations

import re
from math import isqrt

from .rational import QQ, fmt_rational, is_rational, parse_rational, qq


class MixedRadicandError(ArithmeticError):
    pass


def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(s, d)`` with ``n == s*s*d`` and ``d`` square-free (``n > 0``)."""
    if n <= 0:
        raise ValueError("squarefree_split needs a positive integer")
    s, d = 1, 1
    m = n
    p = 2
    # trial division up to the cube root leaves a cofactor that is 1, a
    # prime, a product of two distinct primes, or a prime square
    while p * p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    r = isqrt(m)
    if r * r == m:
        s *= r
    else:
        d *= m
    return s, d


class QuadSurd:
    """``rational + coeff * sqrt(radicand)``; normalized on construction."""

    __slots__ = ("rational", "coeff", "radicand")

    def __init__(self, rational=0, coeff=0, radicand: int = 1):
        rational = qq(rational)
        coeff = qq(coeff)
        radicand = int(radicand)
        if radicand <= 0:
            raise ValueError("radicand must be a positive integer")
        s, d = squarefree_split(radicand)
        coeff = coeff * s
        if d == 1:
            rational, coeff = rational + coeff, QQ(0)
        if coeff == 0:
            d = 1
        self.rational = rational
        self.coeff = coeff
        self.radicand = d

    @classmethod
    def of(cls, x) -> "QuadSurd":
        if isinstance(x, QuadSurd):
            return x
        return cls(qq(x))

    # -- predicates -----------------------------------------------------
    def is_rational(self) -> bool:
        return self.coeff == 0

    def is_integer(self) -> bool:
        return self.coeff == 0 and self.rational.denominator == 1

    def is_odd_integer(self) -> bool:
        return self.is_integer() and int(self.rational) % 2 == 1

    def to_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.rational

    def sign(self) -> int:
        a, b, d = self.rational, self.coeff, self.radicand
        if b == 0:
            return (a > 0) - (a < 0)
        sb = 1 if b > 0 else -1
        if a == 0:
            return sb
        sa = 1 if a > 0 else -1
        if sa == sb:
            return sa
        # opposite signs: compare a^2 with b^2 d
        diff = a * a - b * b * d
        return sa if diff > 0 else (-sa if diff < 0 else 0)

    # -- arithmetic -----------------------------------------------------
    def _common(self, other: "QuadSurd") -> int:
        if self.coeff == 0:
            return other.radicand
        if other.coeff == 0 or other.radicand == self.radicand:
            return self.radicand
        raise MixedRadicandError(f"sqrt({self.radicand}) and sqrt({other.radicand}) cannot be combined")

    def __add__(self, other):
        if not isinstance(other, QuadSurd):
            if not is_rational(other):
                return NotImplemented
            other = QuadSurd(other)
        d = self._common(other)
        return QuadSurd(self.rational + other.rational, self.coeff + other.coeff, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadSurd(-self.rational, -self.coeff, self.radicand)

    def __sub__(self, other):
        if not isinstance(other, QuadSurd) and not is_rational(other):
            return NotImplemented
        return self + (-QuadSurd.of(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_rational(other):
            c = qq(other)
            return QuadSurd(self.rational * c, self.coeff * c, self.radicand)
        if not isinstance(other, QuadSurd):
            return NotImplemented
        d = self._common(other)
        a, b, c, e = self.rational, self.coeff, other.rational, other.coeff
        return QuadSurd(a * c + b * e * d, a * e + b * c, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_rational(other):
            c = qq(other)
            return QuadSurd(self.rational / c, self.coeff / c, self.radicand)
        if not isinstance(other, QuadSurd):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def inverse(self) -> "QuadSurd":
        a, b, d = self.rational, self.coeff, self.radicand
        norm = a * a - b * b * d
        if norm == 0:
            raise ZeroDivisionError("division by zero surd")
        return QuadSurd(a / norm, -b / norm, d)

    def square(self) -> "QuadSurd":
        return self * self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- comparison -----------------------------------------------------
    def _cmp(self, other) -> int:
        return (self - QuadSurd.of(other)).sign()

    def __eq__(self, other):
        if isinstance(other, QuadSurd):
            return (self.rational, self.coeff, self.radicand) == (other.rational, other.coeff, other.radicand)
        if is_rational(other):
            return self.coeff == 0 and self.rational == other
        return NotImplemented

    def __hash__(self):
        if self.coeff == 0:
            return hash(self.rational)
        return hash((self.rational, self.coeff, self.radicand))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __float__(self):
        return float(self.rational) + float(self.coeff) * self.radicand ** 0.5

    # -- text -----------------------------------------------------------
    def to_str(self) -> str:
        if self.coeff == 0:
            return fmt_rational(self.rational)
        surd = f"({fmt_rational(self.coeff)})*sqrt({self.radicand})"
        if self.rational == 0:
            return surd
        return f"{fmt_rational(self.rational)} + {surd}"

    __str__ = to_str

    def __repr__(self):
        return f"QuadSurd({self.to_str()!r})"


_SURD_RE = re.compile(r"^\s*(?:(?P<rat>[+-]?\d+(?:/\d+)?)\s*\+\s*)?\((?P<coef>[+-]?\d+(?:/\d+)?)\)\*sqrt\((?P<rad>\d+)\)\s*$")


def parse_exact(text: str) -> QuadSurd:
    """Inverse of :meth:`QuadSurd.to_str`; plain rationals are accepted too."""
    m = _SURD_RE.match(text)
    if m:
        rat = parse_rational(m.group("rat")) if m.group("rat") else 0
        return QuadSurd(rat, parse_rational(m.group("coef")), int(m.group("rad")))
    return QuadSurd(parse_rational(text))


def sqrt_rational(x) -> QuadSurd:
    """Exact square root of a non-negative rational."""
    x = qq(x)
    if x < 0:
        raise ValueError("square root of a negative rational is not real")
    if x == 0:
        return QuadSurd(0)
    p, q = int(x.numerator), int(x.denominator)
    # sqrt(p/q) = sqrt(p*q)/q
    return QuadSurd(0, QQ(1, q), p * q)


def quadratic_roots(b, c) -> tuple[QuadSurd, QuadSurd]:
    """Roots of ``x^2 + b x + c`` in ascending order (real roots only)."""
    b, c = qq(b), qq(c)
    disc = b * b - 4 * c
    if disc < 0:
        raise ValueError("complex roots")
    s = sqrt_rational(disc)
    lo = (s * -1 - b) / 2
    hi = (s - b) / 2
    return lo, hi
