"""Integrability verdicts for the classical (a = 0) and generic regimes."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from ..elliptic import PendulumParams
from ..errors import AlgebraicExtensionRequired, DegenerateEnergyError, IrrationalExponentError, RegimeMismatchError
from ..exact import QQ, fmt_rational, qq, sqrt_rational
from ..fuchsian.expsol import search_exponential_solutions
from ..fuchsian.frobenius import frobenius_basis
from ..fuchsian.kimura import kimura_solvable
from ..fuchsian.ode import LOG, singular_exponents
from .nve import ALGEBRAIC_E0, build_nve, riemann_confluence_1, riemann_confluence_2

PASS = "necessary-conditions-pass"
OBSTRUCTION = "obstruction"

KIMURA_FAIL = "kimura-fail"
SL2 = "no-exponential-solution-with-log"
FAMILY_EMPTY = "family-intersection-empty"
HOVE_RESIDUE = "hove-residue"


@dataclass(frozen=True)
class Verdict:
    outcome: str
    kind: str | None = None
    witness: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.outcome == PASS

    def to_json(self) -> dict:
        return {"outcome": self.outcome, "obstruction_kind": self.kind, "witness": self.witness}


def _rational_sqrt(x):
    """Exact rational square root or None."""
    x = qq(x)
    if x < 0:
        return None
    p, q = int(x.numerator), int(x.denominator)
    sp, sq = isqrt(p), isqrt(q)
    if sp * sp == p and sq * sq == q:
        return QQ(sp, sq)
    return None


def confluence1_witness(k):
    """Integer ``m >= 0`` with ``k = (m+2)^-2 - 1``, or None."""
    k = qq(k)
    if k <= -1:
        return None
    s = _rational_sqrt(1 / (1 + k))
    if s is None or s.denominator != 1 or s < 2:
        return None
    return int(s) - 2


def confluence2_witness(k):
    """Integer ``p`` with ``k = -p(p+1)/(p^2+p-2)``, or None.

    Equivalently ``p^2 + p - 2k/(k+1) = 0``; the larger root is returned.
    """
    k = qq(k)
    if k == -1:
        return None
    c = -2 * k / (k + 1)
    s = _rational_sqrt(1 - 4 * c)
    if s is None:
        return None
    for p in ((-1 + s) / 2, (-1 - s) / 2):
        if p.denominator == 1:
            return int(p)
    return None


def churchill_witness(k):
    """Rational ``q >= 0`` with ``k = (1-q^2)/(q^2-9)``, or None."""
    k = qq(k)
    if k == -1:
        return None
    return _rational_sqrt((1 + 9 * k) / (1 + k))


def _exponent_differences(data):
    return [d.difference for d in data]


def classical_verdict(k) -> Verdict:
    k = qq(k)
    if k == -1:
        raise RegimeMismatchError("k = -1: the confluent equations are undefined")
    churchill = churchill_witness(k)
    context = {"k": fmt_rational(k), "churchill_q": None if churchill is None else fmt_rational(churchill)}
    if k == 0:
        # separable: radial and angular motions decouple
        return Verdict(PASS, None, {**context, "confluence_1": "undefined at k = 0", "confluence_2": {"p": 0}})
    if k < -1:
        return Verdict(
            OBSTRUCTION,
            KIMURA_FAIL,
            {**context, "stage": "confluence_1", "reason": "exponent difference 2/sqrt(1+k) is not real"},
        )

    ode1 = riemann_confluence_1(k)
    data1 = singular_exponents(ode1)
    lam, mu, nu = (sqrt_rational(QQ(1)), sqrt_rational(QQ(4)), sqrt_rational(4 / (1 + k)))
    kv = kimura_solvable(lam, mu, nu)
    m = confluence1_witness(k)
    if kv.solvable != (m is not None):
        raise AssertionError("Kimura test and the confluence-1 family disagree")
    stage1 = {
        "exponents": [d.to_json() for d in data1],
        "differences": [lam.to_str(), mu.to_str(), nu.to_str()],
        "kimura": kv.to_json(),
        "m": m,
    }
    if m is None:
        return Verdict(OBSTRUCTION, KIMURA_FAIL, {**context, "stage": "confluence_1", "confluence_1": stage1})

    ode2 = riemann_confluence_2(k)
    p = confluence2_witness(k)
    stage2 = {"p": p, "quadratic": f"p^2 + p + {fmt_rational(-2 * k / (k + 1))} = 0"}
    try:
        data2 = singular_exponents(ode2, detect_logs=False)
    except IrrationalExponentError as exc:
        # complex exponents at z = 0: no real Kimura data, no integer p either
        stage2["exponents"] = str(exc)
    else:
        diffs2 = _exponent_differences(data2)
        kv2 = kimura_solvable(*diffs2)
        if kv2.solvable != (p is not None):
            raise AssertionError("Kimura test and the confluence-2 family disagree")
        stage2.update(
            exponents=[d.to_json() for d in data2],
            differences=[d.to_str() for d in diffs2],
            kimura=kv2.to_json(),
        )
    if p is None:
        return Verdict(
            OBSTRUCTION,
            FAMILY_EMPTY,
            {**context, "stage": "confluence_2", "confluence_1": stage1, "confluence_2": stage2},
        )
    return Verdict(PASS, None, {**context, "confluence_1": stage1, "confluence_2": stage2})


def generic_verdict(k, a) -> Verdict:
    k, a = qq(k), qq(a)
    if a == 0:
        raise RegimeMismatchError("a = 0 is the classical regime; use classical_verdict")
    if a == -k:
        raise RegimeMismatchError("a = -k is the Lame regime; use the hove pipeline")
    nve = build_nve(PendulumParams(k, a), ALGEBRAIC_E0)
    ode = nve.ode
    x0 = -(k + 2 * a) / 12
    f = nve.ode.p.den  # monic cubic proportional to 4x^3 - g2 x - g3
    if f(x0) == 0:
        raise DegenerateEnergyError("x0 coincides with a root of f at E0")
    data = singular_exponents(ode)
    basis = frobenius_basis(ode, x0, 3)
    if basis.log_flag != LOG:
        raise AssertionError("expected a logarithm at x0")
    search = search_exponential_solutions(ode, data)
    witness = {
        "E0": nve.data["E0"],
        "x0": fmt_rational(x0),
        "g2": nve.data["g2"],
        "g3": nve.data["g3"],
        "delta": nve.data["delta"],
        "exponents": [d.to_json() for d in data],
        "log_at_x0": {"log_flag": basis.log_flag, "obstruction": fmt_rational(basis.obstruction)},
        "exponential_solutions": search.to_json(),
        "rejected_x_minus_x0": any(
            c.degree == 0 and _is_x_minus_x0(c, x0) for c in search.rejected
        ),
    }
    if search.unresolved:
        raise AlgebraicExtensionRequired(
            "exponential-solution candidates need an algebraic extension of QQ",
            search.unresolved,
            search.solutions,
        )
    if search.solutions:
        return Verdict(PASS, None, witness)
    return Verdict(OBSTRUCTION, SL2, witness)


def hove_verdict(report) -> Verdict:
    """Verdict from a :class:`HoveReport`; passing means no residue up to
    the computed order, nothing more."""
    witness = report.to_json()
    if report.obstruction:
        return Verdict(OBSTRUCTION, HOVE_RESIDUE, witness)
    return Verdict(PASS, None, witness)


def verdict(k, a, E=None, max_order: int = 2) -> Verdict:
    """Dispatch on the regime of ``(k, a)``."""
    params = PendulumParams(k, a)
    if params.regime == "classical":
        return classical_verdict(params.k)
    if params.regime == "generic":
        return generic_verdict(params.k, params.a)
    from .hove import hove_obstruction

    return hove_verdict(hove_obstruction(params.k, qq("-4/5") if E is None else E, max_order))


def _is_x_minus_x0(candidate, x0) -> bool:
    for d, e in candidate.assignment:
        if d.kind == "point" and d.location == x0:
            if e != 1:
                return False
        elif d.kind != "infinity" and e != 0:
            return False
    return True
