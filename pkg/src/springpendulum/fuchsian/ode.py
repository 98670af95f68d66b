"""Second-order linear ODEs ``y'' + p y' + q y = 0`` and their local data."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import IrrationalExponentError, NotFuchsianError
from ..exact import QQ, LaurentSeries, QuadSurd, fmt_rational, quadratic_roots
from .ratfunc import RationalFunction, UPoly, factor_squarefree, poly_gcd

NO_LOG = "no-log"
LOG = "log"
UNDETERMINED = "undetermined"


def _inverse_mod(a: UPoly, m: UPoly) -> UPoly:
    """``a^-1 mod m`` for coprime ``a`` and ``m``."""
    r0, r1 = m, a % m
    s0, s1 = UPoly(), UPoly([1])
    while r1:
        quo, rem = r0.divmod(r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
    if r0.degree != 0:
        raise ValueError("not invertible modulo the given polynomial")
    return (s0 * (1 / r0.lc)) % m


def _value_mod(rf: RationalFunction, F: UPoly) -> UPoly:
    """``rf`` evaluated at a root of irreducible ``F``, as a residue class mod F."""
    return (rf.num * _inverse_mod(rf.den, F)) % F


@dataclass(frozen=True)
class SingularPointData:
    location: object  # rational, UPoly (irreducible factor, degree > 1), or "inf"
    exponents: tuple | None  # ascending pair of QuadSurd, or None if they depend on the root
    log_flag: str = UNDETERMINED
    p_residue: object = None
    q_coeff: object = None

    @property
    def kind(self) -> str:
        if isinstance(self.location, str):
            return "infinity"
        return "factor" if isinstance(self.location, UPoly) else "point"

    @property
    def multiplicity(self) -> int:
        """Number of conjugate points represented (degree of the factor)."""
        return self.location.degree if self.kind == "factor" else 1

    @property
    def difference(self):
        lo, hi = self.exponents
        return hi - lo

    def location_json(self):
        if self.kind == "infinity":
            return "inf"
        if self.kind == "factor":
            return {"factor": self.location.to_json()}
        return fmt_rational(self.location)

    def to_json(self) -> dict:
        return {
            "location": self.location_json(),
            "exponents": None if self.exponents is None else [e.to_str() for e in self.exponents],
            "log_flag": self.log_flag,
        }


@dataclass(frozen=True)
class SeriesODE:
    """``y'' + p y' + q y = 0`` with Laurent-series coefficients in ``t``,
    analysed only at ``t = 0``."""

    p: LaurentSeries
    q: LaurentSeries
    name: str = ""

    def local_coefficients(self, point=0, terms: int = 20):
        if point != 0:
            raise ValueError("series-form ODEs are analysed at t = 0 only")
        return self.p.shift(1), self.q.shift(2)


@dataclass(frozen=True)
class FuchsianODE:
    p: RationalFunction
    q: RationalFunction
    name: str = ""
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "p", RationalFunction.of(self.p))
        object.__setattr__(self, "q", RationalFunction.of(self.q))

    # -- structure ------------------------------------------------------
    def singular_factors(self):
        """Monic irreducible factors of the pole locus (with no multiplicity)."""
        if "factors" not in self._cache:
            den = self.p.den * self.q.den
            self._cache["factors"] = [F for F, _ in factor_squarefree(den)]
        return self._cache["factors"]

    def check_fuchsian(self) -> None:
        for F in self.singular_factors():
            if _pole_order_factor(self.p, F) > 1 or _pole_order_factor(self.q, F) > 2:
                raise NotFuchsianError(f"irregular singularity at a root of {F}")
        if self.p and self.p.order_at_infinity() < 1:
            raise NotFuchsianError("p does not vanish at infinity")
        if self.q and self.q.order_at_infinity() < 2:
            raise NotFuchsianError("q does not vanish to second order at infinity")

    def is_fuchsian(self) -> bool:
        try:
            self.check_fuchsian()
        except NotFuchsianError:
            return False
        return True

    # -- local data -----------------------------------------------------
    def local_coefficients(self, point, terms: int):
        """``(t p, t^2 q)`` expanded at ``point`` (``t = x - point``, or
        ``t = 1/x`` at infinity) to ``terms`` coefficients."""
        if point == "inf":
            # y(x) = Y(s), s = 1/x:  Y'' + (2/s - p(1/s)/s^2) Y' + q(1/s)/s^4 Y = 0
            ps = self.p.laurent_at("inf", terms + 2)
            qs = self.q.laurent_at("inf", terms + 4)
            P = LaurentSeries.monomial(0, 2) - ps.shift(-1)
            Q = qs.shift(-2)
            return P.truncate(terms), Q.truncate(terms)
        P = self.p.laurent_at(point, terms + 1).shift(1)
        Q = self.q.laurent_at(point, terms + 2).shift(2)
        return P.truncate(terms), Q.truncate(terms)

    def substitution_defect(self, omega: RationalFunction) -> RationalFunction:
        """``y''/y + p y'/y + q`` for ``y = exp(int omega)``."""
        return omega.derivative() + omega * omega + self.p * omega + self.q

    def apply(self, y: RationalFunction) -> RationalFunction:
        return y.derivative().derivative() + self.p * y.derivative() + self.q * y

    def to_json(self) -> dict:
        return {"p": self.p.to_json(), "q": self.q.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "FuchsianODE":
        return cls(RationalFunction.from_json(data["p"]), RationalFunction.from_json(data["q"]), data.get("name", ""))


def _pole_order_factor(rf: RationalFunction, F: UPoly) -> int:
    n = 0
    d = rf.den
    while True:
        quo, rem = d.divmod(F)
        if rem:
            return n
        d, n = quo, n + 1


def indicial_roots(p0, q0):
    """Ascending roots of ``rho (rho - 1) + p0 rho + q0``."""
    try:
        return quadratic_roots(QQ(p0) - 1, q0)
    except ValueError:
        raise IrrationalExponentError(f"complex exponents (p0={fmt_rational(p0)}, q0={fmt_rational(q0)})") from None


def exponents_at(ode, point):
    """Ascending exponent pair at a rational point, at ``'inf'``, or at 0 of a series ODE."""
    P, Q = ode.local_coefficients(point, 1)
    if P.val < 0 or Q.val < 0:
        raise NotFuchsianError(f"irregular singular point at {point}")
    return indicial_roots(P.coeff(0), Q.coeff(0))


def _factor_point_data(ode: FuchsianODE, F: UPoly):
    dF = F.derivative()
    # p ~ p0/(x-alpha): (p F)(alpha) = p0 F'(alpha); likewise q F^2 ~ q0 F'(alpha)^2
    pF = _value_mod(ode.p * RationalFunction(F), F)
    qF2 = _value_mod(ode.q * RationalFunction(F * F), F)
    dFinv = _inverse_mod(dF, F)
    p0 = (pF * dFinv) % F
    q0 = (qF2 * dFinv * dFinv) % F
    if p0.degree > 0 or q0.degree > 0:
        return None, p0, q0
    p0c = p0.coeffs[0] if p0 else QQ(0)
    q0c = q0.coeffs[0] if q0 else QQ(0)
    return indicial_roots(p0c, q0c), p0c, q0c


def singular_exponents(ode: FuchsianODE, detect_logs: bool = True, terms: int | None = None):
    """Exponent data at every singular point (irreducible factors of degree
    > 1 reported once, as a block) and at infinity."""
    from .frobenius import log_flag_at

    ode.check_fuchsian()
    out = []
    for F in ode.singular_factors():
        if F.degree == 1:
            pt = -F.coeffs[0]
            ex = exponents_at(ode, pt)
            flag = log_flag_at(ode, pt, ex) if detect_logs else UNDETERMINED
            out.append(SingularPointData(pt, ex, flag))
        else:
            ex, p0, q0 = _factor_point_data(ode, F)
            flag = UNDETERMINED
            if ex is not None and not _integer_gap(ex):
                flag = NO_LOG
            out.append(SingularPointData(F, ex, flag, p0, q0))
    ex = exponents_at(ode, "inf")
    flag = log_flag_at(ode, "inf", ex) if detect_logs else UNDETERMINED
    out.append(SingularPointData("inf", ex, flag))
    return out


def _integer_gap(ex) -> bool:
    d = ex[1] - ex[0]
    return d.is_integer()


def is_ordinary_point(ode: FuchsianODE, point) -> bool:
    return ode.p.den(point) != 0 and ode.q.den(point) != 0


def exponent_sum(data) -> QuadSurd:
    """Fuchs sum over all singular points, counting factor blocks by degree."""
    total = QuadSurd(0)
    for d in data:
        lo, hi = d.exponents
        total = total + (lo + hi) * d.multiplicity
    return total


__all__ = [
    "LOG",
    "NO_LOG",
    "UNDETERMINED",
    "FuchsianODE",
    "SeriesODE",
    "SingularPointData",
    "exponent_sum",
    "exponents_at",
    "indicial_roots",
    "is_ordinary_point",
    "poly_gcd",
    "singular_exponents",
]
