"""Higher-order variational equations along the elliptic orbit at ``a = -k``.

The reduced equations

    r' = p_r,          p_r' = p_theta^2/r^3 + cos(theta) - k(r-1) + a(r-1)^2,
    theta' = p_theta/r^2,  p_theta' = -r sin(theta)

are expanded as ``x = x_0 + eps x_1 + eps^2 x_2 + ...`` around the orbit
``r_0 = (k - 12 wp)/(2k)``.  The first-order solution carries formal
constants ``c1..c4``.  At order ``j`` the linear part is the first
variational operator, and the rest, ``(F_j, G_j, K_j)``, depends only on
lower orders:

    r_j'' - 12 wp r_j = F_j,
    theta_j' = p_theta_j / r_0^2 + G_j,   p_theta_j' = -r_0 theta_j + K_j.

Both are solved by variation of constants; every integration yields a
residue (the ``t^-1`` coefficient of the integrand), and a nonzero residue
polynomial means a logarithm at ``t = 0``.

Only the ``eps^j`` coefficient is computed at order ``j``:
``R^alpha`` uses the power recurrence ``j a_0 b_j = sum_i (alpha i - (j-i)) a_i b_{j-i}``
and ``sin``/``cos`` the coupled recurrence ``j s_j = sum_i i th_i c_{j-i}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..elliptic import PendulumParams, critical_energies, invariants_from_params, wp_series
from ..errors import DegenerateEnergyError, DomainError, InsufficientTruncationError
from ..exact import QQ, LaurentSeries, Poly, PolyRing, fmt_rational, qq
from ..fuchsian.frobenius import frobenius_basis
from ..fuchsian.ode import SeriesODE

CONSTANTS = PolyRing(["c1", "c2", "c3", "c4"])
RESIDUE_NAMES = ("tangential_A", "tangential_B", "normal_alpha", "normal_beta")


def seed_budget(order: int) -> int:
    """Number of ``r_1`` terms used for a run up to ``order``."""
    return 3 * order + 9


@dataclass
class OrderRecord:
    order: int
    valuation_r: int
    valuation_theta: int
    residues: dict  # name -> Poly
    obstruction: bool

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "valuation_r": self.valuation_r,
            "valuation_theta": self.valuation_theta,
            "residues": {k: v.to_json() for k, v in self.residues.items()},
            "obstruction": self.obstruction,
        }


@dataclass
class HoveReport:
    k: object
    E: object
    max_order: int
    orders: list = field(default_factory=list)
    obstruction: bool = False
    obstruction_order: int | None = None
    budget: dict = field(default_factory=dict)

    def record(self, j: int) -> OrderRecord:
        return next(r for r in self.orders if r.order == j)

    def to_json(self, include_budget: bool = True) -> dict:
        out = {
            "k": fmt_rational(self.k),
            "a": fmt_rational(-self.k),
            "E": fmt_rational(self.E),
            "max_order": self.max_order,
            "constants": list(CONSTANTS.names),
            "orders": [r.to_json() for r in self.orders],
            "obstruction": self.obstruction,
            "obstruction_order": self.obstruction_order,
        }
        if include_budget:
            out["budget"] = dict(self.budget)
        return out


class VE1Basis:
    """Frobenius bases of the tangential and normal first-order equations."""

    def __init__(self, k, E, seeds: int):
        self.k = k = qq(k)
        self.E = E = qq(E)
        N = seeds - 3  # r_1 ~ t^-3 carries `seeds` coefficients
        self.N = N
        ell = invariants_from_params(PendulumParams(k, -k, E))
        wp = wp_series(ell.g2, ell.g3, N + 6)
        self.wp = wp
        self.r0 = (wp.scale(-12) + k).scale(1 / (2 * k))
        self.pr0 = self.r0.derivative()
        self.r0inv = self.r0.invert()

        tang = frobenius_basis(SeriesODE(LaurentSeries.zero(), wp.scale(-12)), 0, N + 3)
        self.uA = tang.solutions[0].as_laurent().truncate(N)  # exponent 4
        self.uB = tang.solutions[1].as_laurent().truncate(N)  # exponent -3
        self.duA = self.uA.derivative()
        self.duB = self.uB.derivative()

        norm = frobenius_basis(SeriesODE(LaurentSeries.zero(), -(wp.scale(6) + k / 2)), 0, N + 3)
        phiA = norm.solutions[0].as_laurent().truncate(N + 1)  # exponent 3
        phiB = norm.solutions[1].as_laurent().truncate(N + 1)  # exponent -2
        r0sq = self.r0.mul(self.r0)
        self.thA = phiA.mul(self.r0inv)
        self.thB = phiB.mul(self.r0inv)
        self.pthA = r0sq.mul(self.thA.derivative())
        self.pthB = r0sq.mul(self.thB.derivative())

        self.Wt = _constant(self.uA.mul(self.duB) - self.duA.mul(self.uB), "tangential Wronskian")
        self.Wn = _constant(self.thA.mul(self.pthB) - self.thB.mul(self.pthA), "normal Wronskian")

    def first_order(self):
        c1, c2, c3, c4 = CONSTANTS.gens()
        r1 = self.uA.scale(c1) + self.uB.scale(c2)
        pr1 = self.duA.scale(c1) + self.duB.scale(c2)
        th1 = self.thA.scale(c3) + self.thB.scale(c4)
        pth1 = self.pthA.scale(c3) + self.pthB.scale(c4)
        return r1, pr1, th1, pth1


def _constant(w: LaurentSeries, what: str):
    if w.order <= 0:
        raise InsufficientTruncationError(f"{what} not certified at t^0")
    for n in range(w.val if w.coeffs else 0, w.order):
        if n != 0 and w.coeff(n) != 0:
            raise AssertionError(f"{what} is not constant")
    c = w.coeff(0)
    if c == 0:
        raise AssertionError(f"{what} vanishes")
    return c


def _sum(terms, ring=CONSTANTS):
    acc = None
    for t in terms:
        acc = t if acc is None else acc + t
    return acc if acc is not None else LaurentSeries.zero(ring=ring)


class HoveEngine:
    """Order-by-order solver; ``step()`` advances one order."""

    def __init__(self, k, E, seeds: int):
        self.basis = b = VE1Basis(k, E, seeds)
        self.k = b.k
        self.a = -b.k
        r1, pr1, th1, pth1 = b.first_order()
        self.r = [b.r0, r1]
        self.pr = [b.pr0, pr1]
        self.th = [LaurentSeries.zero(), th1]
        self.pth = [LaurentSeries.zero(), pth1]
        # eps-coefficients of R^-2, R^-3, sin(TH), cos(TH)
        ri2_0 = b.r0inv.mul(b.r0inv)
        ri3_0 = ri2_0.mul(b.r0inv)
        self.Ri2 = [ri2_0, r1.mul(ri2_0.mul(b.r0inv)).scale(-2)]
        self.Ri3 = [ri3_0, r1.mul(ri3_0.mul(b.r0inv)).scale(-3)]
        self.S = [LaurentSeries.zero(), th1]
        self.C = [LaurentSeries.one(), LaurentSeries.zero()]
        self.last_rhs = None

    @property
    def order(self) -> int:
        return len(self.r) - 1

    def _power_excl(self, cache, alpha, j):
        """``eps^j`` coefficient of ``R^alpha`` with ``r_j = 0``."""
        terms = [self.r[i].mul(cache[j - i]).scale(alpha * i - (j - i)) for i in range(1, j)]
        return _sum(terms).mul(self.basis.r0inv).scale(QQ(1, j))

    def rhs(self, j: int):
        """``(F_j, G_j, K_j)`` from orders ``< j``, plus partial caches."""
        a = self.a
        r, pth, th = self.r, self.pth, self.th
        ri2 = self._power_excl(self.Ri2, -2, j)
        ri3 = self._power_excl(self.Ri3, -3, j)
        s = _sum([th[i].mul(self.C[j - i]).scale(i) for i in range(1, j)]).scale(QQ(1, j))
        c = _sum([th[i].mul(self.S[j - i]).scale(i) for i in range(1, j)]).scale(QQ(-1, j))
        p2 = [None, None] + [_sum([pth[i].mul(pth[m - i]) for i in range(1, m)]) for m in range(2, j + 1)]
        F = _sum([p2[i].mul(self.Ri3[j - i]) for i in range(2, j + 1)])
        F = F + c + _sum([r[i].mul(r[j - i]) for i in range(1, j)]).scale(a)
        G = _sum([pth[i].mul(self.Ri2[j - i]) for i in range(1, j)])
        K = -(self.basis.r0.mul(s) + _sum([r[i].mul(self.S[j - i]) for i in range(1, j)]))
        return (F, G, K), (ri2, ri3, s, c)

    def step(self):
        b = self.basis
        j = self.order + 1
        (F, G, K), (ri2, ri3, s, c) = self.rhs(j)
        self.last_rhs = (F, G, K)
        IA = b.uA.mul(F).scale(1 / b.Wt)
        IB = b.uB.mul(F).scale(1 / b.Wt)
        Ja = (b.pthB.mul(G) - b.thB.mul(K)).scale(1 / b.Wn)
        Jb = (b.thA.mul(K) - b.pthA.mul(G)).scale(1 / b.Wn)
        for name, I in zip(RESIDUE_NAMES, (IA, IB, Ja, Jb)):
            if I.order < 0:
                raise InsufficientTruncationError(f"order {j}: residue of {name} integrand not certified")
        intA, resA = IA.integrate()
        intB, resB = IB.integrate()
        alpha, resa = Ja.integrate()
        beta, resb = Jb.integrate()
        residues = dict(zip(RESIDUE_NAMES, (_poly(resA), _poly(resB), _poly(resa), _poly(resb))))

        rj = b.uB.mul(intA) - b.uA.mul(intB)
        prj = b.duB.mul(intA) - b.duA.mul(intB)
        thj = b.thA.mul(alpha) + b.thB.mul(beta)
        pthj = b.pthA.mul(alpha) + b.pthB.mul(beta)
        for name, ser in (("r", rj), ("theta", thj)):
            if ser.order < 1 or not ser.coeffs:
                raise InsufficientTruncationError(f"order {j}: {name}_{j} certified only to t^{ser.order}")

        self.r.append(rj)
        self.pr.append(prj)
        self.th.append(thj)
        self.pth.append(pthj)
        self.Ri2.append(ri2 + rj.mul(self.Ri2[0].mul(b.r0inv)).scale(-2))
        self.Ri3.append(ri3 + rj.mul(self.Ri3[0].mul(b.r0inv)).scale(-3))
        self.S.append(s + thj)
        self.C.append(c)
        obstruction = any(bool(p) for p in residues.values())
        return OrderRecord(j, rj.val, thj.val, residues, obstruction)


def _poly(x) -> Poly:
    return x if isinstance(x, Poly) else CONSTANTS.const(x)


def check_lame_energy(k, E):
    k, E = qq(k), qq(E)
    if k == 0:
        raise DomainError("k = 0 (with a = -k = 0) is the classical regime")
    crit = critical_energies(k, -k)
    if not crit.real:
        raise DomainError(f"no real critical energies for k = {fmt_rational(k)}")
    if E == crit.E_s or E == crit.E_u:
        raise DegenerateEnergyError(f"E = {fmt_rational(E)} is a critical energy: the discriminant vanishes")
    if not crit.contains(E):
        raise DomainError(
            f"E = {fmt_rational(E)} lies outside ({crit.E_s.to_str()}, {crit.E_u.to_str()})"
        )
    return crit


def hove_obstruction(k, E, max_order: int, seeds: int | None = None, max_extensions: int = 4) -> HoveReport:
    """Run the variational chain up to ``max_order`` (stops at the first
    nonzero residue).  The seed budget grows by 6 terms when an order cannot
    be certified."""
    k, E = qq(k), qq(E)
    if max_order < 2:
        raise ValueError("max_order must be >= 2")
    check_lame_energy(k, E)
    seeds = seed_budget(max_order) if seeds is None else seeds
    start = seeds
    for ext in range(max_extensions + 1):
        try:
            report = _run(k, E, max_order, seeds)
        except InsufficientTruncationError:
            seeds += 6
            continue
        report.budget = {"seeds": seeds, "initial_seeds": start, "extensions": ext, "absolute_order": seeds - 3}
        return report
    raise InsufficientTruncationError(f"orders up to {max_order} not certified with {seeds - 6} seed terms")


def _run(k, E, max_order, seeds) -> HoveReport:
    eng = HoveEngine(k, E, seeds)
    report = HoveReport(k, E, max_order)
    for _ in range(2, max_order + 1):
        rec = eng.step()
        report.orders.append(rec)
        if rec.obstruction:
            report.obstruction = True
            report.obstruction_order = rec.order
            break
    return report


def second_order_rhs(k, E, seeds: int | None = None):
    """Forcing terms of the second variational equations.

    Returns ``(F2, T2, engine)`` where ``r_2'' - 12 wp r_2 = F2`` and,
    eliminating ``p_theta_2``,
    ``theta_2'' + 2 (r_0'/r_0) theta_2' + theta_2/r_0 = T2`` with
    ``T2 = G2' + 2 (r_0'/r_0) G2 + K2/r_0^2``.
    """
    k, E = qq(k), qq(E)
    check_lame_energy(k, E)
    eng = HoveEngine(k, E, seed_budget(2) if seeds is None else seeds)
    eng.step()
    F, G, K = eng.last_rhs
    b = eng.basis
    T = G.derivative() + b.pr0.mul(b.r0inv).mul(G).scale(2) + K.mul(b.r0inv).mul(b.r0inv)
    return F, T, eng
