"""Pure-Python Bessel kernels: J_v, I_v and order-(v, v+1) pairs.

This is the fallback implementation for the compiled module
``eigenineq.specfun._kernels``; both expose the same four functions with
identical algorithms (ascending series for small argument, backward
recurrence with even-order normalization for moderate argument, Hankel
asymptotic expansion for large argument; I_v always by ascending series).

Callers guarantee v >= 0 and x >= 0 finite (validation lives in the
package-level wrappers).
"""

import math

_SERIES_CUT = 10.0
_ASYM_FLOOR = 40.0
_EPS_STOP = 1e-17


def _jv_series(v, x):
    # alternating ascending series; cancellation stays below ~1e-13 for x <= 10
    q = 0.25 * x * x
    term = 1.0
    total = 1.0
    biggest = 1.0
    for k in range(1, 400):
        term *= -q / (k * (v + k))
        total += term
        a = abs(term)
        if a > biggest:
            biggest = a
        if a <= _EPS_STOP * biggest:
            break
    return total * math.exp(v * math.log(0.5 * x) - math.lgamma(v + 1.0))


def _jv_asymptotic(v, x):
    # Hankel expansion, valid for x >= max(40, 2 v^2)
    m4 = 4.0 * v * v
    p = 1.0
    q = 0.0
    a = 1.0
    for k in range(1, 40):
        a *= (m4 - (2.0 * k - 1.0) ** 2) / (k * 8.0 * x)
        r = k % 4
        if r == 1:
            q += a
        elif r == 2:
            p -= a
        elif r == 3:
            q -= a
        else:
            p += a
        if abs(a) <= _EPS_STOP:
            break
    omega = x - (0.5 * v + 0.25) * math.pi
    return math.sqrt(2.0 / (math.pi * x)) * (math.cos(omega) * p - math.sin(omega) * q)


def _jv_ladder(mu, top, x):
    """Backward recurrence: J_{mu+j}(x) for j = 0..top, mu in [0, 1)."""
    nstart = int(max(top + 2, x)) + 16 + int(8.0 * math.sqrt(max(x, 1.0)))
    f = [0.0] * (nstart + 2)
    f[nstart + 1] = 0.0
    f[nstart] = 1e-30
    for j in range(nstart, 0, -1):
        f[j - 1] = (2.0 * (mu + j) / x) * f[j] - f[j + 1]
        if abs(f[j - 1]) > 1e250:
            inv = 1e-250
            for i in range(j - 1, nstart + 2):
                f[i] *= inv
    # normalization: (x/2)^mu = sum_k c_k J_{mu+2k},  c_0 = Gamma(mu+1),
    # c_{k+1}/c_k = (mu+2k+2)(mu+k) / ((mu+2k)(k+1))
    c = math.exp(math.lgamma(mu + 1.0))
    norm = c * f[0]
    k = 0
    while 2 * (k + 1) <= nstart:
        if k == 0:
            c *= mu + 2.0
        else:
            c *= (mu + 2.0 * k + 2.0) * (mu + k) / ((mu + 2.0 * k) * (k + 1.0))
        k += 1
        norm += c * f[2 * k]
    scale = math.exp(mu * math.log(0.5 * x)) / norm
    return [f[j] * scale for j in range(top + 1)]


def bessel_j(v, x):
    """J_v(x) for v >= 0, x >= 0."""
    if x == 0.0:
        return 1.0 if v == 0.0 else 0.0
    if x <= _SERIES_CUT:
        return _jv_series(v, x)
    if x >= max(_ASYM_FLOOR, 2.0 * v * v):
        return _jv_asymptotic(v, x)
    mu = v - math.floor(v)
    m = int(math.floor(v))
    return _jv_ladder(mu, m, x)[m]


def bessel_j_pair(v, x):
    """(J_v(x), J_{v+1}(x)) computed consistently."""
    if x == 0.0:
        return (1.0 if v == 0.0 else 0.0), 0.0
    if x <= _SERIES_CUT:
        return _jv_series(v, x), _jv_series(v + 1.0, x)
    if x >= max(_ASYM_FLOOR, 2.0 * (v + 1.0) * (v + 1.0)):
        return _jv_asymptotic(v, x), _jv_asymptotic(v + 1.0, x)
    mu = v - math.floor(v)
    m = int(math.floor(v))
    lad = _jv_ladder(mu, m + 1, x)
    return lad[m], lad[m + 1]


def _iv_series(v, x):
    q = 0.25 * x * x
    term = 1.0
    total = 1.0
    for k in range(1, 1200):
        term *= q / (k * (v + k))
        total += term
        if term <= _EPS_STOP * total:
            break
    return total * math.exp(v * math.log(0.5 * x) - math.lgamma(v + 1.0))


def bessel_i(v, x):
    """I_v(x) for v >= 0, 0 <= x <= 500 (overflow-guarded by the caller)."""
    if x == 0.0:
        return 1.0 if v == 0.0 else 0.0
    return _iv_series(v, x)


def bessel_i_scaled_pair(v, x):
    """(e^-x I_v(x), e^-x I_{v+1}(x))."""
    if x == 0.0:
        return (1.0 if v == 0.0 else 0.0), 0.0
    s = math.exp(-x)
    return s * _iv_series(v, x), s * _iv_series(v + 1.0, x)
