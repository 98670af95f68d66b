"""Frobenius solutions at a regular singular point.

With ``P = t p`` and ``Q = t^2 q`` expanded at the point, a solution
``t^rho sum a_n t^n`` satisfies

    a_N I(N + rho) = -sum_{m>=1} a_{N-m} [P_m (N - m + rho) + Q_m],
    I(rho) = rho (rho - 1) + P_0 rho + Q_0.

When the exponent gap ``d`` is a non-negative integer the smaller exponent
hits ``I = 0`` at ``N = d``; the right-hand side there is the obstruction,
and a logarithm is present exactly when it does not vanish.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import IrrationalExponentError
from ..exact import QQ, LaurentSeries, fmt_rational
from .ode import LOG, NO_LOG, exponents_at


@dataclass(frozen=True)
class FrobeniusSolution:
    """``t^exponent * series + log_coeff * partner * ln t``.

    ``series`` is a power series in ``t`` (valuation >= 0); ``partner`` is the
    index of the log-free solution multiplying ``ln t``.
    """

    exponent: object
    series: LaurentSeries
    log_coeff: object = QQ(0)
    partner: int | None = None

    @property
    def has_log(self) -> bool:
        return self.log_coeff != 0

    def as_laurent(self) -> LaurentSeries:
        """``t^exponent * series`` when the exponent is an integer."""
        if self.exponent.denominator != 1:
            raise ValueError("non-integer exponent")
        return self.series.shift(int(self.exponent))

    def to_json(self) -> dict:
        return {
            "exponent": fmt_rational(self.exponent),
            "series": self.series.to_json(),
            "log_coeff": fmt_rational(self.log_coeff),
        }


@dataclass(frozen=True)
class FrobeniusBasis:
    point: object
    exponents: tuple  # (larger, smaller)
    solutions: tuple  # (y1, y2), y1 for the larger exponent
    log_flag: str
    obstruction: object  # right-hand side at the resonant index (0 if none)

    def wronskian(self) -> LaurentSeries:
        """``y1 y2' - y1' y2`` for integer exponents; the log terms cancel."""
        y1, y2 = self.solutions
        u1 = y1.as_laurent()
        u2 = y2.as_laurent()
        w = u1.mul(u2.derivative()) - u1.derivative().mul(u2)
        if y2.has_log:
            # y2 = kappa y1 ln t + u2 contributes kappa y1^2 / t
            w = w + u1.mul(u1).shift(-1).scale(y2.log_coeff)
        return w


def _dense(series: LaurentSeries, n: int):
    if series.val < 0:
        raise ValueError("point is not regular-singular")
    return [series.coeff(i) for i in range(n)]


def _rational_exponents(ex):
    lo, hi = ex
    if not (lo.is_rational() and hi.is_rational()):
        raise IrrationalExponentError(f"exponents {lo}, {hi} are not rational")
    return hi.to_rational(), lo.to_rational()


def _run(P, Q, rho, N, a0=QQ(1), start=None, forcing=None, stop_at=None):
    """Recurrence coefficients ``a_0..a_{N-1}``.

    ``start`` pre-fills leading coefficients; ``forcing[n]`` is added to the
    right-hand side at index ``n``; at ``stop_at`` the raw right-hand side is
    returned instead of dividing by the vanishing indicial value.
    """
    a = list(start) if start else [a0]
    P0, Q0 = P[0], Q[0]
    for n in range(len(a), N):
        s = QQ(0)
        for m in range(1, n + 1):
            am = a[n - m]
            if am:
                s += am * (P[m] * (n - m + rho) + Q[m])
        rhs = -s
        if forcing is not None:
            rhs -= forcing[n]
        if n == stop_at:
            return a, rhs
        r = n + rho
        ind = r * (r - 1) + P0 * r + Q0
        a.append(rhs / ind)
    return a, None


def frobenius_basis(ode, point, terms: int, exponents=None) -> FrobeniusBasis:
    """Two independent formal solutions with ``terms`` certified
    coefficients each."""
    if exponents is None:
        exponents = exponents_at(ode, point)
    r1, r2 = _rational_exponents(exponents)
    d = r1 - r2
    P, Q = ode.local_coefficients(point, terms)
    P = _dense(P, terms)
    Q = _dense(Q, terms)

    a, _ = _run(P, Q, r1, terms)
    y1 = FrobeniusSolution(r1, LaurentSeries(0, a, terms))

    if d.denominator != 1:
        b, _ = _run(P, Q, r2, terms)
        return FrobeniusBasis(point, (r1, r2), (y1, FrobeniusSolution(r2, LaurentSeries(0, b, terms))), NO_LOG, QQ(0))

    d = int(d)
    if d > 0:
        b, obstruction = _run(P, Q, r2, terms, stop_at=d)
        if obstruction is None:
            raise ValueError(f"terms={terms} does not reach the resonance at index {d}")
        if obstruction == 0:
            b.append(QQ(0))
            b, _ = _run(P, Q, r2, terms, start=b)
            y2 = FrobeniusSolution(r2, LaurentSeries(0, b, terms))
            return FrobeniusBasis(point, (r1, r2), (y1, y2), NO_LOG, QQ(0))
        kappa = -obstruction / (d * a[0])
    else:
        obstruction = None
        kappa = QQ(1)
        b = [QQ(0)]

    # forcing from kappa * y1 ln t, aligned to t^(n + r2)
    g = [QQ(0)] * terms
    for s in range(0, terms - d):
        v = (2 * (s + r1) - 1 + P[0]) * a[s]
        for m in range(1, s + 1):
            v += P[m] * a[s - m]
        g[s + d] = kappa * v
    if d > 0:
        b.append(QQ(0))
    b, _ = _run(P, Q, r2, terms, start=b, forcing=g)
    y2 = FrobeniusSolution(r2, LaurentSeries(0, b, terms), kappa, 0)
    return FrobeniusBasis(point, (r1, r2), (y1, y2), LOG, QQ(1) if obstruction is None else obstruction)


def log_flag_at(ode, point, exponents=None) -> str:
    """Exact logarithm test; only the recurrence up to the gap is run."""
    if exponents is None:
        exponents = exponents_at(ode, point)
    lo, hi = exponents
    gap = hi - lo
    if not gap.is_integer():
        return NO_LOG
    gap = int(gap.to_rational())
    if gap == 0:
        return LOG
    basis = frobenius_basis(ode, point, gap + 1, exponents)
    return basis.log_flag
