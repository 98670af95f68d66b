"""Sparse multivariate polynomials over QQ in a fixed set of formal symbols.

Monomials are packed into a single int (``_BITS`` bits per exponent), so a
monomial product is an integer addition.  Polynomials are immutable.
"""

from __future__ import annotations

from .rational import QQ, fmt_rational, is_rational, parse_rational, qq

_BITS = 12
_MASK = (1 << _BITS) - 1


class RingMismatchError(TypeError):
    pass


class PolyRing:
    """Polynomial ring QQ[names...]."""

    def __init__(self, names):
        self.names = tuple(names)
        self.nvars = len(self.names)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.names == self.names

    def __hash__(self):
        return hash(("PolyRing", self.names))

    def __repr__(self):
        return f"PolyRing({', '.join(self.names)})"

    def pack(self, exps) -> int:
        key = 0
        for i, e in enumerate(exps):
            if e < 0 or e > _MASK:
                raise ValueError("exponent out of range")
            key |= e << (_BITS * i)
        return key

    def unpack(self, key: int) -> tuple:
        return tuple((key >> (_BITS * i)) & _MASK for i in range(self.nvars))

    def gen(self, i: int) -> "Poly":
        return Poly(self, {1 << (_BITS * i): QQ(1)})

    def gens(self):
        return tuple(self.gen(i) for i in range(self.nvars))

    def const(self, c) -> "Poly":
        c = qq(c)
        return Poly(self, {0: c} if c else {})

    @property
    def zero(self) -> "Poly":
        return Poly(self, {})

    @property
    def one(self) -> "Poly":
        return Poly(self, {0: QQ(1)})

    def monomial_str(self, key: int) -> str:
        parts = []
        for name, e in zip(self.names, self.unpack(key)):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def parse_monomial(self, text: str) -> int:
        exps = [0] * self.nvars
        if text.strip() != "1":
            for part in text.split("*"):
                name, _, e = part.strip().partition("^")
                exps[self.names.index(name)] += int(e) if e else 1
        return self.pack(exps)


class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- coercion -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if is_rational(other):
            return self.ring.const(other)
        return None

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Poly":
        if not c:
            return Poly(self.ring, {})
        return Poly(self.ring, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if is_rational(other):
            return self.scale(qq(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        mul_into(out, self.terms, o.terms)
        return Poly(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_rational(other):
            return self.scale(1 / qq(other))
        return NotImplemented

    def __pow__(self, n: int):
        out = self.ring.one
        for _ in range(n):
            out = out * self
        return out

    # -- predicates -----------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(0, QQ(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(self.ring.unpack(m)) for m in self.terms)

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(self.ring.unpack(m)) == degree for m in self.terms)

    def evaluate(self, point):
        total = QQ(0)
        point = [qq(p) for p in point]
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, self.ring.unpack(m)):
                if e:
                    v = v * x**e
            total += v
        return total

    # -- text -----------------------------------------------------------
    def to_json(self) -> dict:
        items = sorted(self.terms.items(), key=lambda mc: self.ring.unpack(mc[0])[::-1])
        return {self.ring.monomial_str(m): fmt_rational(c) for m, c in items}

    @classmethod
    def from_json(cls, ring: PolyRing, data: dict) -> "Poly":
        return cls(ring, {ring.parse_monomial(k): parse_rational(v) for k, v in data.items() if parse_rational(v)})

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({fmt_rational(c)})*{self.ring.monomial_str(m)}" for m, c in self.to_sorted())

    def to_sorted(self):
        return sorted(self.terms.items(), key=lambda mc: self.ring.unpack(mc[0])[::-1])


def mul_into(acc: dict, a: dict, b: dict) -> None:
    """``acc += a*b`` on raw term dicts (zero entries may remain in ``acc``)."""
    get = acc.get
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = ma + mb
            v = get(m)
            acc[m] = ca * cb if v is None else v + ca * cb


def scale_into(acc: dict, a: dict, c) -> None:
    """``acc += c*a`` for a rational ``c``."""
    get = acc.get
    for m, ca in a.items():
        v = get(m)
        acc[m] = ca * c if v is None else v + ca * c
