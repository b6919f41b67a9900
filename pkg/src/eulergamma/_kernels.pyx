# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled tanh-sinh node loop.

Statement-for-statement twin of ``_kernels_py.py``; see that module for the
derivation of the endpoint-distance formulation.  Keep the arithmetic order
identical when editing either file.
"""

from libc.math cimport cosh, exp, expm1, isfinite, log, log1p, pow, sinh

from .errors import NonFiniteIntegrandError

T_MAX = 6.1
HALF_PI = 1.5707963267948966

GENERIC = 0
GAMMA_TAIL = 1
NEG_LOG_POW = 2
BETA = 3
EULER_SYMBOL = 4
ALGEBRAIC = 5

cdef double _T_MAX = 6.1
cdef double _HALF_PI = 1.5707963267948966


cdef inline double _family_value(int family, double p0, double p1, double p2,
                                 double x, double dist, bint near_upper):
    cdef double t, ln, ln_x, ln_1mx, ln_1mxn
    if family == 1:  # GAMMA_TAIL
        t = x if near_upper else dist
        return exp(p0 * log(t) - t)
    if family == 2:  # NEG_LOG_POW
        if near_upper:
            ln = -log1p(-dist)
        else:
            ln = -log(dist)
        return pow(ln, p0)
    if near_upper:
        ln_x = log1p(-dist)
        ln_1mx = log(dist)
    else:
        ln_x = log(dist)
        ln_1mx = log1p(-dist)
    if family == 3:  # BETA
        return exp((p0 - 1.0) * ln_x + (p1 - 1.0) * ln_1mx)
    if family == 4:  # EULER_SYMBOL
        ln_1mxn = log(-expm1(p2 * ln_x))
        return exp((p0 - 1.0) * ln_x + (p1 / p2 - 1.0) * ln_1mxn)
    # ALGEBRAIC
    return exp(p1 * (p0 * ln_x + ln_1mx))


def family_value(family, p0, p1, p2, x, dist, near_upper):
    """Evaluate one built-in integrand at a node (see the pure twin)."""
    if not 1 <= family <= 5:
        raise ValueError(f"unknown integrand family {family}")
    return _family_value(family, p0, p1, p2, x, dist, near_upper)


def point_value(family, p0, p1, p2, x):
    """Evaluate a built-in integrand at a plain abscissa, used for tail probing."""
    return family_value(family, p0, p1, p2, x, x, False)


def level_sum(double a, double b, double h, bint odd_only,
              int family, double p0, double p1, double p2, f):
    """Weighted integrand sum at nodes of spacing ``h``; see the pure twin."""
    cdef double halfspan = 0.5 * (b - a)
    cdef double mid = 0.5 * (a + b)
    cdef int kmax = <int>(_T_MAX / h)
    cdef double total = 0.0
    cdef long n = 0
    cdef int k, step
    cdef double t, sh, ch, z, ez2, opez2, dm, w, dist, fx, v, vp, vm, xp, xm

    if not odd_only:
        if family == 0:
            fx = f(mid)
            if not isfinite(fx):
                raise NonFiniteIntegrandError("integrand not finite")
            total += halfspan * _HALF_PI * fx
        else:
            v = _family_value(family, p0, p1, p2, mid, halfspan, False)
            if not isfinite(v):
                raise NonFiniteIntegrandError("integrand not finite")
            total += halfspan * _HALF_PI * v
        n += 1

    step = 2 if odd_only else 1
    k = 1
    while k <= kmax:
        t = k * h
        sh = sinh(t)
        ch = cosh(t)
        z = _HALF_PI * sh
        ez2 = exp(-2.0 * z)
        opez2 = 1.0 + ez2
        dm = 2.0 * ez2 / opez2
        w = halfspan * _HALF_PI * ch * 4.0 * ez2 / (opez2 * opez2)
        dist = halfspan * dm

        if family == 0:
            xp = b - dist
            if xp != b:
                fx = f(xp)
                if not isfinite(fx):
                    raise NonFiniteIntegrandError("integrand not finite")
                total += w * fx
                n += 1
            xm = a + dist
            if xm != a:
                fx = f(xm)
                if not isfinite(fx):
                    raise NonFiniteIntegrandError("integrand not finite")
                total += w * fx
                n += 1
        else:
            vp = _family_value(family, p0, p1, p2, b - dist, dist, True)
            vm = _family_value(family, p0, p1, p2, a + dist, dist, False)
            if not (isfinite(vp) and isfinite(vm)):
                raise NonFiniteIntegrandError("integrand not finite")
            total += w * (vp + vm)
            n += 2
        k += step

    return total, n
