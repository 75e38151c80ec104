# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Bessel kernels: J_v, I_v and order-(v, v+1) pairs.

Mirrors ``eigenineq.specfun._pure`` function-for-function; the package
selects whichever of the two imports at runtime. Callers guarantee
v >= 0 and x >= 0 finite.
"""

from libc.math cimport cos, exp, fabs, floor, lgamma, log, sin, sqrt, M_PI
from libc.stdlib cimport free, malloc

cdef double _SERIES_CUT = 10.0
cdef double _ASYM_FLOOR = 40.0
cdef double _EPS_STOP = 1e-17


cdef double _jv_series(double v, double x):
    cdef double q = 0.25 * x * x
    cdef double term = 1.0
    cdef double total = 1.0
    cdef double biggest = 1.0
    cdef double a
    cdef int k
    for k in range(1, 400):
        term *= -q / (k * (v + k))
        total += term
        a = fabs(term)
        if a > biggest:
            biggest = a
        if a <= _EPS_STOP * biggest:
            break
    return total * exp(v * log(0.5 * x) - lgamma(v + 1.0))


cdef double _jv_asymptotic(double v, double x):
    cdef double m4 = 4.0 * v * v
    cdef double p = 1.0
    cdef double q = 0.0
    cdef double a = 1.0
    cdef double omega
    cdef int k, r
    for k in range(1, 40):
        a *= (m4 - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (k * 8.0 * x)
        r = k % 4
        if r == 1:
            q += a
        elif r == 2:
            p -= a
        elif r == 3:
            q -= a
        else:
            p += a
        if fabs(a) <= _EPS_STOP:
            break
    omega = x - (0.5 * v + 0.25) * M_PI
    return sqrt(2.0 / (M_PI * x)) * (cos(omega) * p - sin(omega) * q)


cdef int _jv_ladder(double mu, int top, double x, double *out) except -1:
    # backward recurrence J_{mu+j}(x), j = 0..top, written into out[0..top]
    cdef int nstart = <int>(max(<double>(top + 2), x)) + 16 + <int>(8.0 * sqrt(max(x, 1.0)))
    cdef double *f = <double *>malloc((nstart + 2) * sizeof(double))
    if f == NULL:
        raise MemoryError()
    cdef int i, j, k
    cdef double c, norm, scale
    try:
        f[nstart + 1] = 0.0
        f[nstart] = 1e-30
        for j in range(nstart, 0, -1):
            f[j - 1] = (2.0 * (mu + j) / x) * f[j] - f[j + 1]
            if fabs(f[j - 1]) > 1e250:
                for i in range(j - 1, nstart + 2):
                    f[i] *= 1e-250
        c = exp(lgamma(mu + 1.0))
        norm = c * f[0]
        k = 0
        while 2 * (k + 1) <= nstart:
            if k == 0:
                c *= mu + 2.0
            else:
                c *= (mu + 2.0 * k + 2.0) * (mu + k) / ((mu + 2.0 * k) * (k + 1.0))
            k += 1
            norm += c * f[2 * k]
        scale = exp(mu * log(0.5 * x)) / norm
        for j in range(top + 1):
            out[j] = f[j] * scale
    finally:
        free(f)
    return 0


cpdef double bessel_j(double v, double x):
    """J_v(x) for v >= 0, x >= 0."""
    cdef double buf[2]
    cdef double *lad
    cdef double result
    cdef int m
    if x == 0.0:
        return 1.0 if v == 0.0 else 0.0
    if x <= _SERIES_CUT:
        return _jv_series(v, x)
    if x >= max(_ASYM_FLOOR, 2.0 * v * v):
        return _jv_asymptotic(v, x)
    m = <int>floor(v)
    lad = <double *>malloc((m + 2) * sizeof(double))
    if lad == NULL:
        raise MemoryError()
    try:
        _jv_ladder(v - floor(v), m, x, lad)
        result = lad[m]
    finally:
        free(lad)
    return result


cpdef (double, double) bessel_j_pair(double v, double x):
    """(J_v(x), J_{v+1}(x)) computed consistently."""
    cdef double *lad
    cdef double a, b
    cdef int m
    if x == 0.0:
        return (1.0 if v == 0.0 else 0.0), 0.0
    if x <= _SERIES_CUT:
        return _jv_series(v, x), _jv_series(v + 1.0, x)
    if x >= max(_ASYM_FLOOR, 2.0 * (v + 1.0) * (v + 1.0)):
        return _jv_asymptotic(v, x), _jv_asymptotic(v + 1.0, x)
    m = <int>floor(v)
    lad = <double *>malloc((m + 3) * sizeof(double))
    if lad == NULL:
        raise MemoryError()
    try:
        _jv_ladder(v - floor(v), m + 1, x, lad)
        a = lad[m]
        b = lad[m + 1]
    finally:
        free(lad)
    return a, b


cdef double _iv_series(double v, double x):
    cdef double q = 0.25 * x * x
    cdef double term = 1.0
    cdef double total = 1.0
    cdef int k
    for k in range(1, 1200):
        term *= q / (k * (v + k))
        total += term
        if term <= _EPS_STOP * total:
            break
    return total * exp(v * log(0.5 * x) - lgamma(v + 1.0))


cpdef double bessel_i(double v, double x):
    """I_v(x) for v >= 0, 0 <= x <= 500 (overflow-guarded by the caller)."""
    if x == 0.0:
        return 1.0 if v == 0.0 else 0.0
    return _iv_series(v, x)


cpdef (double, double) bessel_i_scaled_pair(double v, double x):
    """(e^-x I_v(x), e^-x I_{v+1}(x))."""
    cdef double s
    if x == 0.0:
        return (1.0 if v == 0.0 else 0.0), 0.0
    s = exp(-x)
    return s * _iv_series(v, x), s * _iv_series(v + 1.0, x)
