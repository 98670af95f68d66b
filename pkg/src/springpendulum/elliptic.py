"""Weierstrass data of the radial motion on the invariant manifold.

With ``m = g = l0 = 1`` the radial motion obeys
``r'' = 1 - k (r-1) + a (r-1)^2`` and, for ``a != 0``, the substitution
``r = (6/a) x + (2a+k)/(2a)`` turns the energy relation into
``x'^2 = 4x^3 - g2 x - g3``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateEnergyError, RegimeMismatchError
from .exact import QQ, LaurentSeries, QuadSurd, fmt_rational, qq, sqrt_rational


@dataclass(frozen=True)
class PendulumParams:
    k: object
    a: object
    E: object = None

    def __post_init__(self):
        object.__setattr__(self, "k", qq(self.k))
        object.__setattr__(self, "a", qq(self.a))
        if self.E is not None:
            object.__setattr__(self, "E", qq(self.E))

    @property
    def regime(self) -> str:
        if self.a == 0:
            return "classical"
        if self.a == -self.k:
            return "lame"
        return "generic"

    def with_energy(self, E) -> "PendulumParams":
        return PendulumParams(self.k, self.a, E)

    def to_json(self) -> dict:
        return {
            "k": fmt_rational(self.k),
            "a": fmt_rational(self.a),
            "E": None if self.E is None else fmt_rational(self.E),
        }


@dataclass(frozen=True)
class EllipticData:
    g2: object
    g3: object
    delta: object

    @property
    def degenerate(self) -> bool:
        return self.delta == 0

    def to_json(self) -> dict:
        return {"g2": fmt_rational(self.g2), "g3": fmt_rational(self.g3), "delta": fmt_rational(self.delta)}


@dataclass(frozen=True)
class CriticalEnergies:
    E_s: QuadSurd | None
    E_u: QuadSurd | None

    @property
    def real(self) -> bool:
        return self.E_s is not None

    def contains(self, E) -> bool:
        """Strictly between the stable and unstable equilibrium energies."""
        return self.real and self.E_s < qq(E) < self.E_u

    def to_json(self) -> dict:
        if not self.real:
            return {"real": False, "E_s": None, "E_u": None}
        return {"real": True, "E_s": self.E_s.to_str(), "E_u": self.E_u.to_str()}


def discriminant(g2, g3):
    return g2**3 - 27 * g3**2


def invariants_from_params(params: PendulumParams) -> EllipticData:
    k, a, E = params.k, params.a, params.E
    if a == 0:
        raise RegimeMismatchError("a = 0: the energy curve is rational, not elliptic")
    if E is None:
        raise ValueError("energy E is required")
    g2 = (k * k - 4 * a) / 12
    g3 = (k**3 - 6 * a * k - 12 * a * a * (E + 1)) / 216
    return EllipticData(g2, g3, discriminant(g2, g3))


def critical_energies(k, a) -> CriticalEnergies:
    """Energies of the two radial equilibria on the invariant manifold."""
    k, a = qq(k), qq(a)
    if a == 0:
        raise RegimeMismatchError("critical energies need a != 0")
    s = k * k - 4 * a
    if s < 0:
        return CriticalEnergies(None, None)
    root = sqrt_rational(s) * s  # s^(3/2)
    base = k**3 - 6 * a * (k + 2 * a)
    den = 12 * a * a
    E_u = (root + base) / den
    E_s = (-root + base) / den
    return CriticalEnergies(E_s, E_u)


def wp_coefficients(g2, g3, count: int):
    """``c_2, c_3, ...``: coefficients of ``t^(2m-2)`` in the expansion of wp."""
    g2, g3 = qq(g2), qq(g3)
    c = {2: g2 / 20, 3: g3 / 28}
    for m in range(4, count + 2):
        # (2m+1)(m-3) > 0 for m >= 4
        s = QQ(0)
        for j in range(2, m - 1):
            s += c[j] * c[m - j]
        c[m] = 3 * s / ((2 * m + 1) * (m - 3))
    return [c[m] for m in range(2, count + 2)]


def wp_series(g2, g3, terms: int) -> LaurentSeries:
    """Laurent expansion of wp(t; g2, g3) at 0 with ``terms`` coefficient
    slots ``t^-2 .. t^(terms-3)``."""
    if terms < 1:
        raise ValueError("terms must be >= 1")
    order = terms - 2
    coeffs = [QQ(0)] * terms
    coeffs[0] = QQ(1)
    ncoef = max(0, (order + 1) // 2)  # powers 2m-2 < order
    for m, c in enumerate(wp_coefficients(g2, g3, ncoef), start=2):
        p = 2 * m - 2
        if p < order:
            coeffs[p + 2] = c
    return LaurentSeries(-2, coeffs, order)


def particular_orbit_series(params: PendulumParams, terms: int):
    """``(r(t), p_r(t))`` of the elliptic orbit on the invariant manifold,
    expanded at its pole ``t = 0``."""
    ell = invariants_from_params(params)
    if ell.degenerate:
        raise DegenerateEnergyError(f"discriminant vanishes at E = {fmt_rational(params.E)}")
    k, a = params.k, params.a
    wp = wp_series(ell.g2, ell.g3, terms)
    r = wp.scale(6 / a) + (1 + k / (2 * a))
    return r, r.derivative()


def energy_residual(params: PendulumParams, r: LaurentSeries, pr: LaurentSeries) -> LaurentSeries:
    """``p_r^2/2 + k/2 (r-1)^2 - a/3 (r-1)^3 - r - E`` as a series."""
    k, a = params.k, params.a
    s = r - 1
    s2 = s.mul(s)
    return pr.mul(pr).scale(QQ(1, 2)) + s2.scale(k / 2) - s2.mul(s).scale(a / 3) - r - params.E
