"""Energy, adaptive integration and the ``r = 1`` Poincare section of the
planar (``p_phi = 0``) spring pendulum."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

from ..errors import DomainError, IntegrationError, LiftError
from . import kernel as _default_kernel

CROSSING_TOL = 1e-10
REFINE_TOL = 1e-13
STEPS_PER_CROSSING = 5000

_STATUS_MESSAGES = {
    2: "step size underflow",
    3: "r reached the coordinate singularity r = 0",
    4: "maximum number of steps exceeded",
}


@dataclass(frozen=True)
class PhaseState:
    r: float
    theta: float
    p_r: float
    p_theta: float

    def __post_init__(self):
        if not self.r > 0:
            raise DomainError(f"r must be positive, got {self.r!r}")

    def as_tuple(self):
        return (float(self.r), float(self.theta), float(self.p_r), float(self.p_theta))


def _ka(params):
    return float(params.k), float(params.a)


def _energy(y, k, a):
    r, th, pr, pth = y
    s = r - 1.0
    return 0.5 * (pr * pr + pth * pth / (r * r)) - r * math.cos(th) + 0.5 * k * s * s - a * s * s * s / 3.0


def hamiltonian_energy(state, params) -> float:
    """``(p_r^2 + p_theta^2/r^2)/2 - r cos(theta) + k/2 (r-1)^2 - a/3 (r-1)^3``."""
    y = state.as_tuple() if isinstance(state, PhaseState) else tuple(float(v) for v in state)
    if not y[0] > 0:
        raise DomainError(f"r must be positive, got {y[0]!r}")
    return _energy(y, *_ka(params))


def vector_field(state, params, kernel=None):
    kern = kernel or _default_kernel
    y = state.as_tuple() if isinstance(state, PhaseState) else tuple(state)
    return tuple(kern.rhs(y, *_ka(params)))


def initial_step(y0, k, a, direction, rtol, atol, kern) -> float:
    """Starting step size from the usual two-evaluation heuristic."""
    f0 = kern.rhs(y0, k, a)
    scale = [atol + abs(v) * rtol for v in y0]

    def rms(xs):
        return math.sqrt(sum((x / s) ** 2 for x, s in zip(xs, scale)) / len(xs))

    d0, d1 = rms(y0), rms(f0)
    h0 = 1e-6 if d0 < 1e-5 or d1 < 1e-5 else 0.01 * d0 / d1
    y1 = [v + h0 * direction * f for v, f in zip(y0, f0)]
    f1 = kern.rhs(y1, k, a)
    d2 = rms([u - v for u, v in zip(f1, f0)]) / h0
    if d1 <= 1e-15 and d2 <= 1e-15:
        h1 = max(1e-6, h0 * 1e-3)
    else:
        h1 = (0.01 / max(d1, d2)) ** (1.0 / 8.0)
    return min(100.0 * h0, h1)


@dataclass
class StepStats:
    accepted: int = 0
    rejected: int = 0
    evaluations: int = 0

    def add(self, naccept, nreject, nfev):
        self.accepted += naccept
        self.rejected += nreject
        self.evaluations += nfev

    def to_json(self) -> dict:
        return asdict(self)


@dataclass
class Trajectory:
    t: list
    states: list  # tuples (r, theta, p_r, p_theta)
    energy0: float
    max_energy_drift: float
    stats: StepStats
    kernel: str

    @property
    def final(self) -> PhaseState:
        return PhaseState(*self.states[-1])

    @property
    def relative_energy_drift(self) -> float:
        return self.max_energy_drift / max(abs(self.energy0), 1e-300)


def integrate_orbit(state0, params, duration, tol=1e-12, atol=None, max_steps=10_000_000, kernel=None) -> Trajectory:
    """Integrate the reduced Hamilton equations for time ``duration``
    (negative values integrate backwards), recording every accepted step."""
    kern = kernel or _default_kernel
    k, a = _ka(params)
    y0 = state0.as_tuple() if isinstance(state0, PhaseState) else tuple(float(v) for v in state0)
    if not y0[0] > 0:
        raise DomainError(f"r must be positive, got {y0[0]!r}")
    atol = tol if atol is None else atol
    t_end = float(duration)
    direction = 1.0 if t_end >= 0 else -1.0
    h = initial_step(list(y0), k, a, direction, tol, atol, kern)
    record = [(0.0, *y0)]
    status, t, y, h, _, _, na, nr, nf = kern.advance(y0, 0.0, t_end, h, k, a, tol, atol, math.inf, 0, max_steps, record)
    if status != 0:
        raise IntegrationError(f"{_STATUS_MESSAGES.get(status, 'failure')} at t = {t!r}")
    stats = StepStats()
    stats.add(na, nr, nf)
    E0 = _energy(y0, k, a)
    drift = max(abs(_energy(row[1:], k, a) - E0) for row in record)
    return Trajectory([row[0] for row in record], [row[1:] for row in record], E0, drift, stats, kern.NAME)


# ---------------------------------------------------------------- section


@dataclass(frozen=True)
class Seed:
    theta: float
    p_theta: float
    sign: int = 1  # sign of p_r at r = 1

    def __post_init__(self):
        sign = {"+": 1, "-": -1}.get(self.sign, self.sign)
        if sign not in (1, -1):
            raise DomainError(f"seed sign must be +1 or -1, got {self.sign!r}")
        object.__setattr__(self, "theta", float(self.theta))
        object.__setattr__(self, "p_theta", float(self.p_theta))
        object.__setattr__(self, "sign", sign)

    def to_json(self) -> dict:
        return {"theta": self.theta, "p_theta": self.p_theta, "p_r_sign": "+" if self.sign > 0 else "-"}


@dataclass(frozen=True)
class SectionPoint:
    theta: float
    p_theta: float
    t: float
    direction: int  # +1 when r increases through 1
    r_residual: float
    energy_residual: float


@dataclass
class SeedResult:
    seed_index: int
    seed: Seed
    points: list = field(default_factory=list)
    stats: StepStats = field(default_factory=StepStats)
    error: dict | None = None

    def to_json(self) -> dict:
        return {
            "seed_index": self.seed_index,
            "seed": self.seed.to_json(),
            "crossings": len(self.points),
            "stats": self.stats.to_json(),
            "error": self.error,
        }


@dataclass
class Section:
    k: float
    a: float
    E: float
    tol: float
    max_crossings: int
    both_directions: bool
    results: list
    kernel: str

    def points(self):
        for res in self.results:
            for j, p in enumerate(res.points):
                yield res.seed_index, j, p

    @property
    def max_energy_residual(self) -> float:
        return max((p.energy_residual for _, _, p in self.points()), default=0.0)

    @property
    def max_r_residual(self) -> float:
        return max((p.r_residual for _, _, p in self.points()), default=0.0)

    def summary(self) -> dict:
        return {
            "points": sum(len(r.points) for r in self.results),
            "failed_seeds": [r.seed_index for r in self.results if r.error],
            "max_energy_residual": self.max_energy_residual,
            "max_r_residual": self.max_r_residual,
            "kernel": self.kernel,
        }


def lift_seed(seed: Seed, E) -> PhaseState:
    """State at ``r = 1`` with energy ``E``:  ``p_r^2 = 2(E + cos theta) - p_theta^2``."""
    disc = 2.0 * (float(E) + math.cos(seed.theta)) - seed.p_theta * seed.p_theta
    if disc < 0:
        raise LiftError(
            f"seed (theta={seed.theta!r}, p_theta={seed.p_theta!r}) does not lift at E={float(E)!r}: "
            f"p_r^2 = {disc!r} < 0"
        )
    pr = math.sqrt(disc)
    return PhaseState(1.0, seed.theta, pr if seed.sign > 0 else -pr, seed.p_theta)


def seed_grid(E, n=11, theta_range=(-math.pi / 2, math.pi / 2), p_range=(-1.0, 1.0), sign=1) -> list:
    """Liftable points of an ``n x n`` grid in the (theta, p_theta) plane."""
    E = float(E)
    seeds = []
    for i in range(n):
        th = theta_range[0] + (theta_range[1] - theta_range[0]) * i / (n - 1) if n > 1 else theta_range[0]
        for j in range(n):
            p = p_range[0] + (p_range[1] - p_range[0]) * j / (n - 1) if n > 1 else p_range[0]
            if 2.0 * (E + math.cos(th)) - p * p >= 0:
                seeds.append(Seed(th, p, sign))
    return seeds


def refine_crossing(kern, t0, y0, t1, y1, k, a, gtol=REFINE_TOL, maxit=80):
    """Locate ``r = 1`` inside an accepted step by Newton iteration on the
    sub-step length, safeguarded by bisection of the bracket."""
    g_lo = y0[0] - 1.0
    g_hi = y1[0] - 1.0
    if g_hi == 0.0:
        return t1, tuple(y1)
    lo, hi = 0.0, t1 - t0
    s = hi * g_lo / (g_lo - g_hi)
    best = None
    for _ in range(maxit):
        y = kern.trial_step(y0, s, k, a)
        g = y[0] - 1.0
        if best is None or abs(g) < abs(best[1][0] - 1.0):
            best = (t0 + s, tuple(y))
        if abs(g) <= gtol:
            break
        if (g < 0) == (g_lo < 0):
            lo, g_lo = s, g
        else:
            hi, g_hi = s, g
        step = s - g / y[2] if y[2] != 0 else None
        left, right = min(lo, hi), max(lo, hi)
        if step is not None and left < step < right:
            s = step
        else:
            s = 0.5 * (lo + hi)
        if s == lo or s == hi:
            break
    if abs(best[1][0] - 1.0) > CROSSING_TOL:
        raise IntegrationError(f"crossing refinement stalled at |r - 1| = {abs(best[1][0] - 1.0)!r}")
    return best


def _run_seed(index, seed, k, a, E, tol, max_crossings, mode, t_max, max_steps, kern) -> SeedResult:
    res = SeedResult(index, seed)
    state = lift_seed(seed, E)
    y = state.as_tuple()
    t = 0.0
    t_end = math.inf if t_max is None else float(t_max)
    h = initial_step(list(y), k, a, 1.0, tol, tol, kern)
    budget = max_steps
    try:
        while len(res.points) < max_crossings:
            status, t1, y1, h, t0, y0, na, nr, nf = kern.advance(y, t, t_end, h, k, a, tol, tol, math.inf, mode, budget)
            res.stats.add(na, nr, nf)
            budget -= na
            if status == 0:
                break
            if status != 1:
                raise IntegrationError(f"{_STATUS_MESSAGES.get(status, 'failure')} at t = {t1!r}")
            tc, yc = refine_crossing(kern, t0, y0, t1, y1, k, a)
            res.points.append(
                SectionPoint(
                    yc[1],
                    yc[3],
                    tc,
                    1 if y1[0] > y0[0] else -1,
                    abs(yc[0] - 1.0),
                    abs(_energy(yc, k, a) - E),
                )
            )
            t, y = t1, y1
    except IntegrationError as exc:
        res.error = exc.to_json()
    return res


def poincare_section(
    params,
    E,
    seeds,
    max_crossings=500,
    tol=1e-12,
    both_directions=False,
    t_max=None,
    max_steps=None,
    kernel=None,
) -> Section:
    """Crossings of ``r = 1`` (ascending by default) for each seed.

    Seeds are validated up front; an integration failure is recorded on its
    seed and the remaining seeds still run.
    """
    kern = kernel or _default_kernel
    k, a = _ka(params)
    E = float(E)
    seeds = [s if isinstance(s, Seed) else Seed(*s) for s in seeds]
    for s in seeds:
        lift_seed(s, E)
    mode = kern.BOTH if both_directions else kern.ASCENDING
    if max_steps is None:
        max_steps = STEPS_PER_CROSSING * max(max_crossings, 1) + 10_000
    results = [
        _run_seed(i, s, k, a, E, tol, max_crossings, mode, t_max, max_steps, kern) for i, s in enumerate(seeds)
    ]
    return Section(k, a, E, tol, max_crossings, both_directions, results, kern.NAME)


CSV_HEADER = "seed_index,crossing_index,theta,p_theta,t,energy_residual"


def _g(x) -> str:
    return format(float(x), ".17g")


def write_section_csv(section: Section, fh) -> int:
    """Write the section points; returns the number of rows."""
    fh.write(CSV_HEADER + "\n")
    n = 0
    for i, j, p in section.points():
        fh.write(f"{i},{j},{_g(p.theta)},{_g(p.p_theta)},{_g(p.t)},{_g(p.energy_residual)}\n")
        n += 1
    return n


def read_section_csv(fh) -> list:
    header = fh.readline().strip()
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header!r}")
    rows = []
    for line in fh:
        if line.strip():
            i, j, th, p, t, e = line.strip().split(",")
            rows.append((int(i), int(j), float(th), float(p), float(t), float(e)))
    return rows
