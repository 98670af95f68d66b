"""Pure-Python DOP853 kernel for the reduced planar equations.

State layout is ``(r, theta, p_r, p_theta)``.  Every floating-point
operation is performed in the same order as in the compiled kernel, so both
produce bit-identical trajectories.
"""

import math

from scipy.integrate._ivp import dop853_coefficients as _tab

SAFETY = 0.9
MIN_FACTOR = 0.2
MAX_FACTOR = 10.0
ERROR_EXPONENT = -1.0 / 8.0

RUNNING = -1
DONE = 0
CROSSING = 1
STEP_UNDERFLOW = 2
COLLAPSE = 3
MAX_STEPS = 4

ASCENDING = 1
BOTH = 2

_A = [[float(_tab.A[s, j]) for j in range(12)] for s in range(12)]
_B = [float(x) for x in _tab.B[:12]]
_E3 = [float(x) for x in _tab.E3[:13]]
_E5 = [float(x) for x in _tab.E5[:13]]

# zero coefficients are skipped; adding a signed zero never changes a
# finite accumulator, so this matches the dense loops of the compiled kernel
_A_NZ = [[(j, _A[s][j]) for j in range(s) if _A[s][j] != 0.0] for s in range(12)]
_B_NZ = [(j, _B[j]) for j in range(12) if _B[j] != 0.0]
_E3_NZ = [(j, _E3[j]) for j in range(13) if _E3[j] != 0.0]
_E5_NZ = [(j, _E5[j]) for j in range(13) if _E5[j] != 0.0]

NAME = "python"


def rhs(y, k, a):
    r, th, pr, pth = y
    s = r - 1.0
    return [
        pr,
        pth / (r * r),
        pth * pth / (r * r * r) + math.cos(th) - k * s + a * s * s,
        -r * math.sin(th),
    ]


def _step(y, f, h, k, a, rtol, atol):
    K = [f]
    for s in range(1, 12):
        tmp = []
        for i in range(4):
            acc = 0.0
            for j, c in _A_NZ[s]:
                acc = acc + c * K[j][i]
            tmp.append(y[i] + h * acc)
        K.append(rhs(tmp, k, a))
    ynew = []
    for i in range(4):
        acc = 0.0
        for j, c in _B_NZ:
            acc = acc + c * K[j][i]
        ynew.append(y[i] + h * acc)
    fnew = rhs(ynew, k, a)
    K.append(fnew)
    e5 = 0.0
    e3 = 0.0
    for i in range(4):
        sc = atol + max(abs(y[i]), abs(ynew[i])) * rtol
        acc5 = 0.0
        for j, c in _E5_NZ:
            acc5 = acc5 + c * K[j][i]
        acc3 = 0.0
        for j, c in _E3_NZ:
            acc3 = acc3 + c * K[j][i]
        v5 = acc5 / sc
        v3 = acc3 / sc
        e5 = e5 + v5 * v5
        e3 = e3 + v3 * v3
    if e5 == 0.0 and e3 == 0.0:
        err = 0.0
    else:
        err = abs(h) * e5 / math.sqrt((e5 + 0.01 * e3) * 4.0)
    return ynew, fnew, err


def trial_step(y, h, k, a):
    """One uncontrolled step of size ``h`` from ``y``."""
    ynew, _, _ = _step(list(y), rhs(y, k, a), h, k, a, 1.0, 1.0)
    return ynew


def _crossed(g0, g1, mode):
    if mode == ASCENDING:
        return g0 < 0.0 <= g1
    if mode == BOTH:
        return (g0 < 0.0 <= g1) or (g0 > 0.0 >= g1)
    return False


def advance(y0, t, t_end, h_abs, k, a, rtol, atol, h_max, mode, max_steps, record=None):
    """Adaptive stepping from ``(t, y0)`` towards ``t_end``.

    Returns ``(status, t, y, h_abs, t_prev, y_prev, naccept, nreject, nfev)``;
    on ``CROSSING`` the sign change of ``r - 1`` lies in ``[t_prev, t]``.
    """
    direction = 1.0 if t_end >= t else -1.0
    y = [float(v) for v in y0]
    f = rhs(y, k, a)
    nfev = 1
    naccept = 0
    nreject = 0
    t_prev = t
    y_prev = y
    status = RUNNING
    while status == RUNNING:
        if t == t_end:
            status = DONE
            break
        if naccept >= max_steps:
            status = MAX_STEPS
            break
        min_step = 10.0 * abs(math.nextafter(t, direction * math.inf) - t)
        if h_abs > h_max:
            h_abs = h_max
        elif h_abs < min_step:
            h_abs = min_step
        rejected = False
        while True:
            if h_abs < min_step:
                status = STEP_UNDERFLOW
                break
            t_new = t + h_abs * direction
            if direction * (t_new - t_end) > 0.0:
                t_new = t_end
            h = t_new - t
            h_abs = abs(h)
            ynew, fnew, err = _step(y, f, h, k, a, rtol, atol)
            nfev += 12
            if err < 1.0:
                if err == 0.0:
                    factor = MAX_FACTOR
                else:
                    factor = min(MAX_FACTOR, SAFETY * err**ERROR_EXPONENT)
                if rejected:
                    factor = min(1.0, factor)
                h_abs = h_abs * factor
                break
            h_abs = h_abs * max(MIN_FACTOR, SAFETY * err**ERROR_EXPONENT)
            rejected = True
            nreject += 1
        if status != RUNNING:
            break
        if not ynew[0] > 0.0 or not math.isfinite(ynew[0]):
            status = COLLAPSE
            break
        naccept += 1
        t_prev, y_prev = t, y
        t, y, f = t_new, ynew, fnew
        if record is not None:
            record.append((t, y[0], y[1], y[2], y[3]))
        if _crossed(y_prev[0] - 1.0, y[0] - 1.0, mode):
            status = CROSSING
    return status, t, tuple(y), h_abs, t_prev, tuple(y_prev), naccept, nreject, nfev
