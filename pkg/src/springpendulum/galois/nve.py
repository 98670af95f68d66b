"""Normal variational equations along the elliptic orbits.

The radial energy relation is ``r'^2 = V(r)`` with
``V(r) = 2E + 2r - k (r-1)^2 + (2a/3)(r-1)^3``.  Along such an orbit the
normal equation ``Theta'' + 2 (r'/r) Theta' + Theta/r = 0`` becomes, in the
variable ``r``,

    Theta_rr + (V'/(2V) + 2/r) Theta_r + Theta/(r V) = 0,

and with ``Phi = r Theta`` in time, ``Phi'' + (1 - r'')/r Phi = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..elliptic import PendulumParams, invariants_from_params, particular_orbit_series, wp_series
from ..errors import DegenerateEnergyError, DomainError, RegimeMismatchError
from ..exact import LaurentSeries, fmt_rational, qq
from ..fuchsian.ode import FuchsianODE, SeriesODE
from ..fuchsian.ratfunc import RationalFunction, UPoly

TIME_DOMAIN = "time-domain"
ALGEBRAIC_E0 = "algebraic-E0"
RIEMANN_1 = "riemann-confluence-1"
RIEMANN_2 = "riemann-confluence-2"
LAME = "lame"
VARIANTS = (TIME_DOMAIN, ALGEBRAIC_E0, RIEMANN_1, RIEMANN_2, LAME)


@dataclass(frozen=True)
class NVE:
    variant: str
    params: PendulumParams
    ode: object  # FuchsianODE or SeriesODE
    data: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"variant": self.variant, "params": self.params.to_json()}
        if isinstance(self.ode, FuchsianODE):
            out["ode"] = self.ode.to_json()
        else:
            out["ode"] = {"p": self.ode.p.to_json(), "q": self.ode.q.to_json()}
        out.update(self.data)
        return out


def energy_E0(k, a):
    """Energy at which the algebraic NVE is analysed in the generic regime."""
    k, a = qq(k), qq(a)
    return (2 * (3 * k + 2 * a) * a * a - 1) / (12 * a * a)


def radial_potential(k, a, E) -> UPoly:
    """``V(r)`` with ``r'^2 = V(r)`` on the invariant manifold."""
    s = UPoly([-1, 1])  # r - 1
    return UPoly([2 * qq(E), 2]) - s * s * qq(k) + s * s * s * (2 * qq(a) / 3)


def radial_nve(k, a, E, scale=1) -> FuchsianODE:
    """Normal variational equation in ``z = scale * r``."""
    V = radial_potential(k, a, E)
    if not V:
        raise DegenerateEnergyError("radial potential vanishes identically")
    r = RationalFunction.x()
    Vr = RationalFunction(V)
    p = RationalFunction(V.derivative()) / (Vr * 2) + 2 / r
    q = 1 / (r * Vr)
    c = qq(scale)
    # d/dr = c d/dz:  p_z(z) = p_r(z/c)/c,  q_z(z) = q_r(z/c)/c^2
    sub = RationalFunction(UPoly([0, 1 / c]))
    pz = _compose(p, sub) / c
    qz = _compose(q, sub) / (c * c)
    return FuchsianODE(pz, qz)


def _compose(f: RationalFunction, g: RationalFunction) -> RationalFunction:
    num = RationalFunction(UPoly())
    for c in reversed(f.num.coeffs):
        num = num * g + c
    den = RationalFunction(UPoly())
    for c in reversed(f.den.coeffs):
        den = den * g + c
    return num / den


def riemann_confluence_1(k) -> FuchsianODE:
    """Classical case at ``E = -(2k+1)/(2k)``: the two non-zero finite
    singular points merge; ``z = k r/(1+k)``."""
    k = _classical_k(k)
    return radial_nve(k, 0, -(2 * k + 1) / (2 * k), k / (1 + k))


def riemann_confluence_2(k) -> FuchsianODE:
    """Classical case at ``E = k/2``: a singular point merges with the
    origin; ``z = k r/(2(k+1))``."""
    k = _classical_k(k)
    return radial_nve(k, 0, k / 2, k / (2 * (k + 1)))


def _classical_k(k):
    k = qq(k)
    if k == 0:
        raise DomainError("the confluent Riemann equations need k != 0")
    if k == -1:
        raise DomainError("k = -1 makes the confluence change of variable singular")
    return k


def algebraic_nve(k, a, E) -> FuchsianODE:
    """``Phi(t) = y(wp(t))``:  y'' + f'/(2f) y' - (144x^2 - k^2)/(2(12x+k+2a) f) y = 0."""
    k, a = qq(k), qq(a)
    ell = invariants_from_params(PendulumParams(k, a, E))
    f = UPoly([-ell.g3, -ell.g2, 0, 4])
    F = RationalFunction(f)
    p = RationalFunction(f.derivative()) / (F * 2)
    q = -RationalFunction(UPoly([-k * k, 0, 144])) / (RationalFunction(UPoly([k + 2 * a, 12])) * F * 2)
    return FuchsianODE(p, q)


def time_domain_q(params: PendulumParams, terms: int) -> LaurentSeries:
    """``(k^2 - 144 wp^2)/(24 wp + 2k + 4a)`` as a Laurent series at the pole."""
    k, a = params.k, params.a
    ell = invariants_from_params(params)
    wp = wp_series(ell.g2, ell.g3, terms + 4)
    num = wp.mul(wp).scale(-144) + k * k
    den = wp.scale(24) + (2 * k + 4 * a)
    return num.mul(den.invert()).truncate(terms - 2)


def phi_q_from_orbit(params: PendulumParams, terms: int) -> LaurentSeries:
    """``(1 - r'')/r`` along the orbit: the normal equation for ``Phi = r Theta``."""
    r, pr = particular_orbit_series(params, terms + 6)
    return (1 - pr.derivative()).mul(r.invert()).truncate(terms - 2)


def _check_energy(params: PendulumParams):
    if params.E is None:
        raise DomainError("energy E is required")
    ell = invariants_from_params(params)
    if ell.degenerate:
        raise DegenerateEnergyError(f"discriminant vanishes at E = {fmt_rational(params.E)}")
    return ell


def build_nve(params: PendulumParams, variant: str, terms: int = 20) -> NVE:
    k, a = params.k, params.a
    if variant == RIEMANN_1 or variant == RIEMANN_2:
        if a != 0:
            raise RegimeMismatchError(f"{variant} needs a = 0")
        if variant == RIEMANN_1:
            E = -(2 * k + 1) / (2 * k) if k != 0 else None
            ode = riemann_confluence_1(k)
            scale = k / (1 + k)
        else:
            E = k / 2
            ode = riemann_confluence_2(k)
            scale = k / (2 * (k + 1))
        return NVE(variant, params.with_energy(E), ode, {"z_scale": fmt_rational(scale)})

    if variant == ALGEBRAIC_E0:
        if a == 0 or a == -k:
            raise RegimeMismatchError("algebraic-E0 needs a not in {0, -k}")
        E0 = energy_E0(k, a)
        p = params.with_energy(E0)
        ell = _check_energy(p)
        ode = algebraic_nve(k, a, E0)
        x0 = -(k + 2 * a) / 12
        return NVE(variant, p, ode, {"E0": fmt_rational(E0), "x0": fmt_rational(x0), **ell.to_json()})

    if variant == LAME:
        if a != -k:
            raise RegimeMismatchError("lame needs a = -k")
        ell = _check_energy(params)
        wp = wp_series(ell.g2, ell.g3, terms)
        q = -(wp.scale(6) + k / 2)
        ode = SeriesODE(LaurentSeries.zero(), q, "lame")
        return NVE(variant, params, ode, {"n": "2", "B": fmt_rational(k / 2), **ell.to_json()})

    if variant == TIME_DOMAIN:
        if a == 0:
            raise RegimeMismatchError("time-domain NVE needs a != 0")
        _check_energy(params)
        q = time_domain_q(params, terms)
        return NVE(variant, params, SeriesODE(LaurentSeries.zero(), q, "time-domain"))

    raise ValueError(f"unknown NVE variant {variant!r}")


@dataclass(frozen=True)
class VE1Matrix:
    """Coefficient matrix of the first variational equations in
    ``(R, P_R, Theta, P_Theta)`` along the orbit ``r(t)``."""

    entries: tuple  # 4x4 of LaurentSeries

    def row(self, i):
        return self.entries[i]

    def apply(self, eta):
        out = []
        for row in self.entries:
            acc = LaurentSeries.zero()
            for a, x in zip(row, eta):
                if not a.is_zero() and not x.is_zero():
                    acc = acc + a.mul(x)
            out.append(acc)
        return out

    def blocks_decoupled(self) -> bool:
        off = [self.entries[i][j] for i in (0, 1) for j in (2, 3)] + [self.entries[i][j] for i in (2, 3) for j in (0, 1)]
        return all(e.is_zero() for e in off)


def ve1_matrix(params: PendulumParams, terms: int) -> VE1Matrix:
    k, a = params.k, params.a
    r, _ = particular_orbit_series(params, terms)
    zero = LaurentSeries.zero()
    one = LaurentSeries.one()
    rinv = r.invert()
    return VE1Matrix(
        (
            (zero, one, zero, zero),
            ((r - 1).scale(2 * a) - k, zero, zero, zero),
            (zero, zero, zero, rinv.mul(rinv)),
            (zero, zero, -r, zero),
        )
    )


