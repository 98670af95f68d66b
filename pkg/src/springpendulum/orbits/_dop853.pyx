# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled DOP853 kernel for the reduced planar equations.

Mirrors ``_dop853_py`` operation for operation; build with
``-ffp-contract=off`` so no fused multiply-adds change the rounding.
"""

from libc.math cimport INFINITY, cos, fabs, isfinite, nextafter, pow, sin, sqrt

from scipy.integrate._ivp import dop853_coefficients as _tab

cdef enum:
    NS = 12

cdef double SAFETY = 0.9
cdef double MIN_FACTOR = 0.2
cdef double MAX_FACTOR = 10.0
cdef double ERROR_EXPONENT = -1.0 / 8.0

RUNNING = -1
DONE = 0
CROSSING = 1
STEP_UNDERFLOW = 2
COLLAPSE = 3
MAX_STEPS = 4

ASCENDING = 1
BOTH = 2

NAME = "cython"

cdef double _A[NS][NS]
cdef double _B[NS]
cdef double _E3[NS + 1]
cdef double _E5[NS + 1]


def _load():
    cdef int s, j
    for s in range(NS):
        for j in range(NS):
            _A[s][j] = float(_tab.A[s, j])
        _B[s] = float(_tab.B[s])
    for j in range(NS + 1):
        _E3[j] = float(_tab.E3[j])
        _E5[j] = float(_tab.E5[j])


_load()


cdef inline void _rhs(const double* y, double k, double a, double* out) noexcept nogil:
    cdef double r = y[0]
    cdef double th = y[1]
    cdef double pr = y[2]
    cdef double pth = y[3]
    cdef double s = r - 1.0
    out[0] = pr
    out[1] = pth / (r * r)
    out[2] = pth * pth / (r * r * r) + cos(th) - k * s + a * s * s
    out[3] = -r * sin(th)


cdef double _step(const double* y, const double* f, double h, double k, double a,
                  double rtol, double atol, double* ynew, double* fnew) noexcept nogil:
    cdef double K[NS + 1][4]
    cdef double tmp[4]
    cdef double acc, acc3, acc5, sc, m, v3, v5, e3, e5
    cdef int s, j, i
    for i in range(4):
        K[0][i] = f[i]
    for s in range(1, NS):
        for i in range(4):
            acc = 0.0
            for j in range(s):
                if _A[s][j] != 0.0:
                    acc = acc + _A[s][j] * K[j][i]
            tmp[i] = y[i] + h * acc
        _rhs(tmp, k, a, K[s])
    for i in range(4):
        acc = 0.0
        for j in range(NS):
            if _B[j] != 0.0:
                acc = acc + _B[j] * K[j][i]
        ynew[i] = y[i] + h * acc
    _rhs(ynew, k, a, K[NS])
    for i in range(4):
        fnew[i] = K[NS][i]
    e5 = 0.0
    e3 = 0.0
    for i in range(4):
        m = fabs(y[i])
        if fabs(ynew[i]) > m:
            m = fabs(ynew[i])
        sc = atol + m * rtol
        acc5 = 0.0
        for j in range(NS + 1):
            if _E5[j] != 0.0:
                acc5 = acc5 + _E5[j] * K[j][i]
        acc3 = 0.0
        for j in range(NS + 1):
            if _E3[j] != 0.0:
                acc3 = acc3 + _E3[j] * K[j][i]
        v5 = acc5 / sc
        v3 = acc3 / sc
        e5 = e5 + v5 * v5
        e3 = e3 + v3 * v3
    if e5 == 0.0 and e3 == 0.0:
        return 0.0
    return fabs(h) * e5 / sqrt((e5 + 0.01 * e3) * 4.0)


def rhs(y, double k, double a):
    cdef double yy[4]
    cdef double out[4]
    cdef int i
    for i in range(4):
        yy[i] = y[i]
    _rhs(yy, k, a, out)
    return [out[0], out[1], out[2], out[3]]


def trial_step(y, double h, double k, double a):
    """One uncontrolled step of size ``h`` from ``y``."""
    cdef double yy[4]
    cdef double f[4]
    cdef double ynew[4]
    cdef double fnew[4]
    cdef int i
    for i in range(4):
        yy[i] = y[i]
    _rhs(yy, k, a, f)
    _step(yy, f, h, k, a, 1.0, 1.0, ynew, fnew)
    return [ynew[0], ynew[1], ynew[2], ynew[3]]


cdef inline bint _crossed(double g0, double g1, int mode) noexcept nogil:
    if mode == 1:
        return g0 < 0.0 and 0.0 <= g1
    if mode == 2:
        return (g0 < 0.0 and 0.0 <= g1) or (g0 > 0.0 and 0.0 >= g1)
    return False


def advance(y0, double t, double t_end, double h_abs, double k, double a, double rtol,
            double atol, double h_max, int mode, long max_steps, list record=None):
    """Adaptive stepping from ``(t, y0)`` towards ``t_end``.

    Returns ``(status, t, y, h_abs, t_prev, y_prev, naccept, nreject, nfev)``;
    on ``CROSSING`` the sign change of ``r - 1`` lies in ``[t_prev, t]``.
    """
    cdef double direction = 1.0 if t_end >= t else -1.0
    cdef double y[4]
    cdef double f[4]
    cdef double yprev[4]
    cdef double ynew[4]
    cdef double fnew[4]
    cdef double t_prev = t, t_new, h, err, factor, min_step
    cdef long naccept = 0, nreject = 0, nfev = 1
    cdef int status = -1, i
    cdef bint rejected
    for i in range(4):
        y[i] = y0[i]
        yprev[i] = y[i]
    _rhs(y, k, a, f)
    while status == -1:
        if t == t_end:
            status = 0
            break
        if naccept >= max_steps:
            status = 4
            break
        min_step = 10.0 * fabs(nextafter(t, direction * INFINITY) - t)
        if h_abs > h_max:
            h_abs = h_max
        elif h_abs < min_step:
            h_abs = min_step
        rejected = False
        while True:
            if h_abs < min_step:
                status = 2
                break
            t_new = t + h_abs * direction
            if direction * (t_new - t_end) > 0.0:
                t_new = t_end
            h = t_new - t
            h_abs = fabs(h)
            err = _step(y, f, h, k, a, rtol, atol, ynew, fnew)
            nfev += 12
            if err < 1.0:
                if err == 0.0:
                    factor = MAX_FACTOR
                else:
                    factor = SAFETY * pow(err, ERROR_EXPONENT)
                    if factor > MAX_FACTOR:
                        factor = MAX_FACTOR
                if rejected and factor > 1.0:
                    factor = 1.0
                h_abs = h_abs * factor
                break
            factor = SAFETY * pow(err, ERROR_EXPONENT)
            if factor < MIN_FACTOR:
                factor = MIN_FACTOR
            h_abs = h_abs * factor
            rejected = True
            nreject += 1
        if status != -1:
            break
        if not (ynew[0] > 0.0) or not isfinite(ynew[0]):
            status = 3
            break
        naccept += 1
        t_prev = t
        t = t_new
        for i in range(4):
            yprev[i] = y[i]
            y[i] = ynew[i]
            f[i] = fnew[i]
        if record is not None:
            record.append((t, y[0], y[1], y[2], y[3]))
        if _crossed(yprev[0] - 1.0, y[0] - 1.0, mode):
            status = 1
    return (status, t, (y[0], y[1], y[2], y[3]), h_abs, t_prev,
            (yprev[0], yprev[1], yprev[2], yprev[3]), naccept, nreject, nfev)
