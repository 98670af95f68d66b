"""Truncated Laurent series ``sum c_n t^n`` with a certified truncation order.

A series is stored as ``(val, coeffs, order)``: ``coeffs[i]`` is the
coefficient of ``t^(val+i)`` and every coefficient below ``t^order`` is
exact.  Coefficients past the stored list but below ``order`` are zero.
``order`` may be ``math.inf`` for series known exactly (polynomials).

Coefficients live in QQ (``ring is None``) or in a :class:`PolyRing`.
"""

from __future__ import annotations

import math

from .poly import Poly, PolyRing, RingMismatchError, mul_into, scale_into
from .rational import QQ, fmt_rational, is_rational, parse_rational, qq

INF = math.inf


class TruncationError(ArithmeticError):
    """A requested coefficient or order is beyond what can be certified."""


class NotInvertibleError(ArithmeticError):
    pass


def _zero(ring):
    return QQ(0) if ring is None else ring.zero


def _as_ring(c, ring):
    if ring is None:
        if isinstance(c, Poly):
            raise RingMismatchError("polynomial coefficient in a rational series")
        return qq(c)
    if isinstance(c, Poly):
        if c.ring != ring:
            raise RingMismatchError(f"{c.ring} vs {ring}")
        return c
    return ring.const(c)


def _join_rings(r1, r2):
    if r1 is None:
        return r2
    if r2 is None or r1 == r2:
        return r1
    raise RingMismatchError(f"{r1} vs {r2}")


def convolve(A, B, n: int, ring):
    """First ``n`` coefficients of the Cauchy product of ``A`` and ``B``."""
    La, Lb = len(A), len(B)
    out = []
    if ring is None:
        for k in range(n):
            lo = k - Lb + 1 if k >= Lb else 0
            hi = k if k < La else La - 1
            s = QQ(0)
            for i in range(lo, hi + 1):
                s += A[i] * B[k - i]
            out.append(s)
        return out
    for k in range(n):
        lo = k - Lb + 1 if k >= Lb else 0
        hi = k if k < La else La - 1
        acc: dict = {}
        for i in range(lo, hi + 1):
            a = A[i]
            b = B[k - i]
            if not a or not b:
                continue
            if isinstance(a, Poly):
                if isinstance(b, Poly):
                    mul_into(acc, a.terms, b.terms)
                else:
                    scale_into(acc, a.terms, b)
            else:
                scale_into(acc, b.terms, a)
        out.append(Poly(ring, {m: c for m, c in acc.items() if c}))
    return out


class LaurentSeries:
    __slots__ = ("val", "coeffs", "order", "ring")

    def __init__(self, val: int, coeffs, order=INF, ring: PolyRing | None = None):
        coeffs = [_as_ring(c, ring) for c in coeffs]
        if order != INF:
            order = int(order)
            if len(coeffs) > order - val:
                coeffs = coeffs[: max(order - val, 0)]
        start = 0
        while start < len(coeffs) and not coeffs[start]:
            start += 1
        end = len(coeffs)
        while end > start and not coeffs[end - 1]:
            end -= 1
        if start == end:
            self.val = order if order != INF else 0
            self.coeffs = ()
        else:
            self.val = val + start
            self.coeffs = tuple(coeffs[start:end])
        self.order = order
        self.ring = ring

    # -- construction ---------------------------------------------------
    @classmethod
    def zero(cls, order=INF, ring=None) -> "LaurentSeries":
        return cls(0, [], order, ring)

    @classmethod
    def one(cls, ring=None) -> "LaurentSeries":
        return cls(0, [1], INF, ring)

    @classmethod
    def monomial(cls, n: int, c=1, ring=None) -> "LaurentSeries":
        return cls(n, [c], INF, ring)

    @classmethod
    def _raw(cls, val, coeffs, order, ring) -> "LaurentSeries":
        # trusted fast path: coefficients already in the ring
        s = cls.__new__(cls)
        coeffs = list(coeffs)
        if order != INF and len(coeffs) > order - val:
            del coeffs[max(order - val, 0):]
        start = 0
        n = len(coeffs)
        while start < n and not coeffs[start]:
            start += 1
        end = n
        while end > start and not coeffs[end - 1]:
            end -= 1
        if start == end:
            s.val = order if order != INF else 0
            s.coeffs = ()
        else:
            s.val = val + start
            s.coeffs = tuple(coeffs[start:end])
        s.order = order
        s.ring = ring
        return s

    # -- inspection -----------------------------------------------------
    def is_zero(self) -> bool:
        """True when every certified coefficient vanishes."""
        return not self.coeffs

    @property
    def valuation(self):
        return self.val

    def coeff(self, n: int):
        if n >= self.order:
            raise TruncationError(f"coefficient t^{n} is beyond certified order {self.order}")
        i = n - self.val
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return _zero(self.ring)

    def __getitem__(self, n: int):
        return self.coeff(n)

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero series has no leading coefficient")
        return self.coeffs[0]

    def dense(self, lo: int, hi: int):
        """Coefficients of ``t^lo .. t^(hi-1)``."""
        return [self.coeff(n) for n in range(lo, hi)]

    def with_ring(self, ring) -> "LaurentSeries":
        if ring == self.ring:
            return self
        if self.ring is not None:
            raise RingMismatchError(f"{self.ring} vs {ring}")
        return LaurentSeries(self.val, self.coeffs, self.order, ring)

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            return other
        if is_rational(other) or isinstance(other, Poly):
            return LaurentSeries(0, [other], INF, self.ring if not isinstance(other, Poly) else other.ring)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ring = _join_rings(self.ring, o.ring)
        order = min(self.order, o.order)
        if not self.coeffs and not o.coeffs:
            return LaurentSeries.zero(order, ring)
        lo = min(self.val if self.coeffs else o.val, o.val if o.coeffs else self.val)
        hi = max(self.val + len(self.coeffs), o.val + len(o.coeffs))
        if order != INF:
            hi = min(hi, order)
        a = self.with_ring(ring) if self.ring != ring else self
        b = o.with_ring(ring) if o.ring != ring else o
        zero = _zero(ring)
        out = []
        for n in range(lo, hi):
            i, j = n - a.val, n - b.val
            x = a.coeffs[i] if 0 <= i < len(a.coeffs) else zero
            y = b.coeffs[j] if 0 <= j < len(b.coeffs) else zero
            out.append(x + y)
        return LaurentSeries._raw(lo, out, order, ring)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries._raw(self.val, [-c for c in self.coeffs], self.order, self.ring)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "LaurentSeries":
        if isinstance(c, Poly):
            ring = _join_rings(self.ring, c.ring)
            return LaurentSeries._raw(self.val, [c * x for x in self.coeffs], self.order, ring)
        c = qq(c)
        if self.ring is None:
            return LaurentSeries._raw(self.val, [c * x for x in self.coeffs], self.order, None)
        return LaurentSeries._raw(self.val, [x.scale(c) for x in self.coeffs], self.order, self.ring)

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            return self.mul(other)
        if is_rational(other) or isinstance(other, Poly):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def mul(self, other: "LaurentSeries", min_order=None) -> "LaurentSeries":
        ring = _join_rings(self.ring, other.ring)
        va = self.val if self.coeffs else self.order
        vb = other.val if other.coeffs else other.order
        order = min(self.order + vb, other.order + va)
        if min_order is not None and order < min_order:
            raise TruncationError(f"product certified only to t^{order}, below requested t^{min_order}")
        if not self.coeffs or not other.coeffs:
            return LaurentSeries.zero(order, ring)
        val = va + vb
        n = len(self.coeffs) + len(other.coeffs) - 1
        if order != INF:
            n = min(n, order - val)
        if n <= 0:
            return LaurentSeries.zero(order, ring)
        return LaurentSeries._raw(val, convolve(self.coeffs, other.coeffs, n, ring), order, ring)

    def __truediv__(self, other):
        if isinstance(other, LaurentSeries):
            return self.mul(other.invert())
        if is_rational(other):
            return self.scale(1 / qq(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.invert() ** (-n)
        out = LaurentSeries.one(self.ring)
        for _ in range(n):
            out = out.mul(self)
        return out

    def invert(self, max_order=None) -> "LaurentSeries":
        """Multiplicative inverse; certified order ``order - 2*val``."""
        if not self.coeffs:
            raise NotInvertibleError("series is zero to its certified order")
        a0 = self.coeffs[0]
        if isinstance(a0, Poly):
            if not a0.is_constant():
                raise NotInvertibleError("leading coefficient is a non-constant polynomial")
            a0 = a0.constant_value()
        v = self.val
        order = self.order - 2 * v
        if max_order is not None:
            order = min(order, max_order)
        if order == INF:
            raise TruncationError("inverse of an exact series needs max_order")
        nterms = order + v
        inv0 = 1 / a0
        A = self.coeffs
        La = len(A)
        ring = self.ring
        B = [inv0 if ring is None else ring.const(inv0)]
        mneg = -inv0
        for n in range(1, nterms):
            hi = min(n, La - 1)
            if ring is None:
                s = QQ(0)
                for i in range(1, hi + 1):
                    s += A[i] * B[n - i]
                B.append(s * mneg)
            else:
                acc: dict = {}
                for i in range(1, hi + 1):
                    a, b = A[i], B[n - i]
                    if a and b:
                        mul_into(acc, a.terms, b.terms)
                B.append(Poly(ring, {m: c * mneg for m, c in acc.items() if c}))
        return LaurentSeries._raw(-v, B, order, ring)

    def derivative(self) -> "LaurentSeries":
        out = []
        for i, c in enumerate(self.coeffs):
            n = self.val + i
            out.append(c * n if self.ring is None else c.scale(n))
        return LaurentSeries._raw(self.val - 1, out, self.order - 1, self.ring)

    def integrate(self):
        """Termwise antiderivative without the ``t^-1`` term, and its residue.

        The antiderivative has zero constant term.
        """
        if self.order <= -1:
            raise TruncationError("residue is not certified (order <= -1)")
        residue = self.coeff(-1)
        out = []
        zero = _zero(self.ring)
        for i, c in enumerate(self.coeffs):
            n = self.val + i
            if n == -1:
                out.append(zero)
            else:
                d = QQ(1, n + 1)
                out.append(c * d if self.ring is None else c.scale(d))
        if not self.coeffs:
            return LaurentSeries.zero(self.order + 1, self.ring), residue
        return LaurentSeries._raw(self.val + 1, out, self.order + 1, self.ring), residue

    def shift(self, n: int) -> "LaurentSeries":
        """Multiply by ``t^n``."""
        if not self.coeffs:
            return LaurentSeries.zero(self.order + n, self.ring)
        return LaurentSeries._raw(self.val + n, self.coeffs, self.order + n, self.ring)

    def truncate(self, order) -> "LaurentSeries":
        return LaurentSeries._raw(self.val, self.coeffs, min(order, self.order), self.ring)

    # -- comparison -----------------------------------------------------
    def agrees_with(self, other: "LaurentSeries") -> bool:
        """Equal on every coefficient certified in both series."""
        order = min(self.order, other.order)
        lo = min(self.val, other.val)
        if order == INF:
            hi = max(self.val + len(self.coeffs), other.val + len(other.coeffs))
        else:
            hi = order
        return all(self.coeff(n) == other.coeff(n) for n in range(lo, hi))

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.val, self.coeffs, self.order) == (other.val, other.coeffs, other.order)

    __hash__ = None

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs[:6]):
            terms.append(f"({c})*t^{self.val + i}")
        tail = " + ..." if len(self.coeffs) > 6 else ""
        return f"LaurentSeries({' + '.join(terms) or '0'}{tail} + O(t^{self.order}))"

    # -- serialization --------------------------------------------------
    def to_json(self) -> dict:
        if self.ring is None:
            coeffs = [fmt_rational(c) for c in self.coeffs]
        else:
            coeffs = [c.to_json() for c in self.coeffs]
        return {
            "valuation": self.val,
            "coefficients": coeffs,
            "order": None if self.order == INF else self.order,
        }

    @classmethod
    def from_json(cls, data: dict, ring: PolyRing | None = None) -> "LaurentSeries":
        order = INF if data.get("order") is None else int(data["order"])
        if ring is None:
            coeffs = [parse_rational(c) for c in data["coefficients"]]
        else:
            coeffs = [Poly.from_json(ring, c) for c in data["coefficients"]]
        return cls(int(data["valuation"]), coeffs, order, ring)


def from_poly_coeffs(coeffs, ring=None) -> LaurentSeries:
    """Exact series from a list of polynomial coefficients (low to high)."""
    return LaurentSeries(0, coeffs, INF, ring)
