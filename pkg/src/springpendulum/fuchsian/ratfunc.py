"""Univariate polynomials and rational functions over QQ.

Arithmetic is our own; only factorization into irreducibles is delegated
to sympy.
"""

from __future__ import annotations

from ..exact import QQ, INF, LaurentSeries, fmt_rational, parse_rational, qq


class UPoly:
    """Dense polynomial, ``coeffs[i]`` multiplies ``x^i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [qq(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> "UPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "UPoly":
        return cls([c])

    @classmethod
    def from_roots(cls, roots) -> "UPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-qq(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else QQ(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            other = UPoly([other])
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _lift(self, other):
        return other if isinstance(other, UPoly) else UPoly([other])

    def __add__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UPoly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly()
        out = [QQ(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = UPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def divmod(self, other: "UPoly"):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = 1 / other.lc
        quo = [QQ(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv
            if c:
                quo[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return UPoly(quo), UPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return self.divmod(self._lift(other))[0]

    def __mod__(self, other):
        return self.divmod(self._lift(other))[1]

    def monic(self) -> "UPoly":
        if not self:
            return self
        inv = 1 / self.lc
        return UPoly([c * inv for c in self.coeffs])

    def derivative(self) -> "UPoly":
        return UPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = QQ(0) if not isinstance(x, UPoly) else UPoly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def taylor_shift(self, c) -> "UPoly":
        """``p(x + c)``."""
        return self(UPoly([qq(c), 1]))

    def reversed_poly(self, deg: int | None = None) -> "UPoly":
        """``x^deg p(1/x)``."""
        deg = self.degree if deg is None else deg
        c = list(self.coeffs) + [QQ(0)] * (deg + 1 - len(self.coeffs))
        return UPoly(reversed(c[: deg + 1]))

    def valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return INF

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{fmt_rational(c)}*x^{i}" if i else fmt_rational(c))
        return " + ".join(terms)

    def to_json(self) -> list:
        return [fmt_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "UPoly":
        return cls([parse_rational(str(c)) for c in data])


def poly_gcd(a: UPoly, b: UPoly) -> UPoly:
    while b:
        a, b = b, a % b
    return a.monic()


def factor_squarefree(p: UPoly):
    """Monic irreducible factors with multiplicities, ``[(F, mult), ...]``,
    in a deterministic order (by degree, then coefficients)."""
    import sympy

    if p.degree < 1:
        return []
    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(int(c.numerator), int(c.denominator)) * x**i for i, c in enumerate(p.coeffs))
    _, facs = sympy.factor_list(sympy.Poly(expr, x, domain="QQ"))
    out = []
    for f, m in facs:
        cs = [qq(f"{sympy.Rational(c).p}/{sympy.Rational(c).q}") for c in reversed(f.all_coeffs())]
        out.append((UPoly(cs).monic(), int(m)))
    out.sort(key=lambda fm: (fm[0].degree, [float(c) for c in fm[0].coeffs], fm[1]))
    return out


class RationalFunction:
    """``num/den`` in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, UPoly) else UPoly([num])
        den = UPoly([1]) if den is None else (den if isinstance(den, UPoly) else UPoly([den]))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = UPoly(), UPoly([1])
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lc = den.lc
        self.num = UPoly([c / lc for c in num.coeffs])
        self.den = den.monic()

    @classmethod
    def of(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        return cls(x)

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls(UPoly.x())

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = RationalFunction.of(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = RationalFunction.of(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFunction.of(other))

    def __rsub__(self, other):
        return RationalFunction.of(other) - self

    def __mul__(self, other):
        other = RationalFunction.of(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunction.of(other)
        if not other:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalFunction.of(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction(self.den ** (-n), self.num ** (-n))
        return RationalFunction(self.num**n, self.den**n)

    def derivative(self) -> "RationalFunction":
        return RationalFunction(self.num.derivative() * self.den - self.num * self.den.derivative(), self.den * self.den)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num(x) / d

    def pole_order_at(self, point) -> int:
        """Order of the pole at a rational point (negative for zeros)."""
        n = self.num.taylor_shift(point).valuation()
        d = self.den.taylor_shift(point).valuation()
        if n == INF:
            return -INF
        return d - n

    def order_at_infinity(self) -> int:
        """``deg den - deg num``: valuation in ``1/x`` at infinity."""
        if not self.num:
            return INF
        return self.den.degree - self.num.degree

    def laurent_at(self, point, terms: int) -> LaurentSeries:
        """Expansion in ``t = x - point`` (``point`` rational) or in
        ``s = 1/x`` (``point == 'inf'``), certified to ``terms`` coefficients
        beyond the leading one's slot."""
        if point == "inf":
            dn, dd = self.num.degree, self.den.degree
            num = self.num.reversed_poly()
            den = self.den.reversed_poly()
            shift = dd - dn
        else:
            num = self.num.taylor_shift(point)
            den = self.den.taylor_shift(point)
            shift = 0
        if not num:
            return LaurentSeries.zero()
        N = LaurentSeries(0, num.coeffs)
        D = LaurentSeries(0, den.coeffs)
        vd = den.valuation()
        vn = num.valuation()
        order = vn - vd + terms
        out = N.mul(D.invert(max_order=order - vn))
        return out.shift(shift).truncate(order + shift)

    def __repr__(self):
        if self.den == UPoly([1]):
            return f"({self.num})"
        return f"({self.num})/({self.den})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RationalFunction":
        if isinstance(data, (int, str)):
            return cls(UPoly([parse_rational(str(data))]))
        return cls(UPoly.from_json(data["num"]), UPoly.from_json(data.get("den", ["1"])))
