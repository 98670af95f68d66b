"""Search for exponential solutions ``y = P * prod (x - x_i)^e_i * prod F_j^e_j``.

Exponents are chosen one per singular point (one shared exponent per
irreducible factor of degree > 1); wherever a logarithm is present only the
larger exponent is admissible.  The degree of ``P`` is then
``m = -e_inf - sum e_i - sum deg(F_j) e_j`` and ``P`` solves a linear system.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..errors import AlgebraicExtensionRequired
from ..exact import QQ, QuadSurd, fmt_rational, solve_linear
from .ode import LOG, FuchsianODE, SingularPointData, singular_exponents
from .ratfunc import RationalFunction, UPoly, poly_gcd


@dataclass(frozen=True)
class Candidate:
    """One exponent assignment with a non-negative integer degree."""

    assignment: tuple  # ((SingularPointData, exponent), ...), finite points then infinity
    degree: int
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "exponents": [{"location": d.location_json(), "exponent": e.to_str()} for d, e in self.assignment],
            "degree": self.degree,
            "reason": self.reason,
        }

    def closed_form(self) -> str:
        parts = []
        for d, e in self.assignment:
            if d.kind == "infinity" or e == 0:
                continue
            base = f"(x - {fmt_rational(d.location)})" if d.kind == "point" else f"({d.location})"
            parts.append(f"{base}^({e.to_str()})")
        return " * ".join(parts) or "1"


@dataclass(frozen=True)
class ExponentialSolution:
    assignment: tuple
    P: UPoly
    degree: int
    omega: RationalFunction  # logarithmic derivative y'/y

    @property
    def exponents(self) -> dict:
        return {d.location_json() if d.kind != "factor" else str(d.location): e for d, e in self.assignment}

    def defect(self, ode: FuchsianODE) -> RationalFunction:
        return ode.substitution_defect(self.omega)

    def to_json(self) -> dict:
        return {
            "exponents": [{"location": d.location_json(), "exponent": e.to_str()} for d, e in self.assignment],
            "P": self.P.to_json(),
            "degree": self.degree,
        }


@dataclass(frozen=True)
class ExponentialSearch:
    solutions: list
    rejected: list = field(default_factory=list)
    unresolved: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "solutions": [s.to_json() for s in self.solutions],
            "rejected": [c.to_json() for c in self.rejected],
            "unresolved": [c.to_json() for c in self.unresolved],
        }


def _surd_parts(values):
    """Rational part and per-radicand surd coefficients of a sum of surds."""
    rat = QQ(0)
    surds: dict[int, object] = {}
    for v in values:
        rat += v.rational
        if v.coeff:
            surds[v.radicand] = surds.get(v.radicand, QQ(0)) + v.coeff
    return rat, surds


def _choices(d: SingularPointData):
    lo, hi = d.exponents
    if d.log_flag == LOG or lo == hi:
        return [hi]
    return [lo, hi]


def _omega(assignment) -> RationalFunction:
    x = RationalFunction.x()
    w = RationalFunction(UPoly())
    for d, e in assignment:
        if d.kind == "infinity" or e == 0:
            continue
        e = e.to_rational()
        if d.kind == "point":
            w = w + RationalFunction(UPoly([e])) / (x - d.location)
        else:
            F = d.location
            w = w + RationalFunction(F.derivative() * e, F)
    return w


def _solve_polynomial(ode: FuchsianODE, w: RationalFunction, m: int):
    """Monic ``P`` of degree ``m`` with ``P'' + (2w+p) P' + (w'+w^2+pw+q) P = 0``."""
    A = w * 2 + ode.p
    B = ode.substitution_defect(w)
    # common denominator D, then D P'' + (A D) P' + (B D) P = 0 over QQ[x]
    D = A.den * B.den // poly_gcd(A.den, B.den)
    Ap = A.num * (D // A.den)
    Bp = B.num * (D // B.den)
    cols = []
    for i in range(m + 1):
        c = Bp * UPoly([0] * i + [1])
        if i >= 1:
            c = c + Ap * UPoly([0] * (i - 1) + [i])
        if i >= 2:
            c = c + D * UPoly([0] * (i - 2) + [i * (i - 1)])
        cols.append(c)
    nrows = max((c.degree for c in cols), default=-1) + 1
    if nrows <= 0:
        return UPoly([0] * m + [1])
    rows = [[cols[i].coeffs[r] if r < len(cols[i].coeffs) else QQ(0) for i in range(m)] for r in range(nrows)]
    rhs = [-(cols[m].coeffs[r] if r < len(cols[m].coeffs) else QQ(0)) for r in range(nrows)]
    if m == 0:
        return UPoly([1]) if all(v == 0 for v in rhs) else None
    sol = solve_linear(rows, rhs)
    if not sol.consistent:
        return None
    return UPoly(list(sol.solution) + [1])


def search_exponential_solutions(ode: FuchsianODE, data=None) -> ExponentialSearch:
    if data is None:
        data = singular_exponents(ode)
    solutions, rejected, unresolved = [], [], []

    if any(d.exponents is None for d in data):
        # exponents differ between conjugate roots: nothing can be enumerated over QQ
        c = Candidate(tuple((d, QuadSurd(0)) for d in data if d.exponents is not None), -1,
                      "exponents depend on the choice of root of an irreducible factor")
        raise AlgebraicExtensionRequired("exponents are not constant on a factor block", [c])

    per_point = [_choices(d) for d in data]
    for combo in itertools.product(*per_point):
        assignment = tuple(zip(data, combo))
        values = [e * d.multiplicity for d, e in assignment]
        rat, surds = _surd_parts(values)
        m = -rat
        if any(c != 0 for c in surds.values()) or m.denominator != 1 or m < 0:
            continue
        if any(not e.is_rational() for e in combo):
            # surds cancel in the degree relation, but omega is irrational
            unresolved.append(Candidate(assignment, int(m), "irrational exponents cancel in the degree relation"))
            continue
        m = int(m)
        w = _omega(assignment)
        P = _solve_polynomial(ode, w, m)
        if P is None:
            rejected.append(Candidate(assignment, m, "substitution leaves a nonzero defect"))
            continue
        omega = w + RationalFunction(P.derivative(), P)
        sol = ExponentialSolution(assignment, P, m, omega)
        if ode.substitution_defect(omega):
            raise AssertionError("exponential solution failed re-verification")
        solutions.append(sol)

    # asymmetric splits of factor blocks are not searched; report any that pass the degree test
    for idx, d in enumerate(data):
        if d.kind != "factor":
            continue
        lo, hi = d.exponents
        if lo == hi or d.log_flag == LOG:
            continue
        others = [per_point[j] for j in range(len(data)) if j != idx]
        rest_data = [data[j] for j in range(len(data)) if j != idx]
        for j in range(1, d.multiplicity):
            block = lo * j + hi * (d.multiplicity - j)
            for combo in itertools.product(*others):
                values = [e * dd.multiplicity for dd, e in zip(rest_data, combo)] + [block]
                rat, surds = _surd_parts(values)
                m = -rat
                if any(c != 0 for c in surds.values()) or m.denominator != 1 or m < 0:
                    continue
                assignment = tuple(zip(rest_data, combo)) + ((d, block / d.multiplicity),)
                unresolved.append(Candidate(assignment, int(m), f"asymmetric split ({j} roots at {lo}) of {d.location}"))
    return ExponentialSearch(solutions, rejected, unresolved)


def find_exponential_solutions(ode: FuchsianODE, data=None) -> list:
    search = search_exponential_solutions(ode, data)
    if search.unresolved:
        raise AlgebraicExtensionRequired(
            f"{len(search.unresolved)} candidate(s) need an algebraic extension",
            search.unresolved,
            search.solutions,
        )
    return search.solutions
