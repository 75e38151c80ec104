"""Bessel functions of the first kind, modified Bessel functions, and zeros.

Evaluation kernels exist twice: a compiled Cython module (``_kernels``)
and a pure-Python mirror (``_pure``). The compiled one is preferred at
import; set ``EIGENINEQ_PURE=1`` to force the fallback. All functions are
pure and safe to call concurrently.
"""

import math
import os
from dataclasses import dataclass

from . import _pure
from ._zeros import jv_zeros, radial_neumann_roots
from .errors import ConvergenceError, RangeError

try:
    from . import _kernels
except ImportError:  # pragma: no cover - build-environment dependent
    _kernels = None

if _kernels is not None and not os.environ.get("EIGENINEQ_PURE"):
    _impl = _kernels
else:
    _impl = _pure

_I_OVERFLOW_GUARD = 500.0

__all__ = [
    "BesselZero",
    "ConvergenceError",
    "RangeError",
    "backend_name",
    "bessel_i",
    "bessel_i_deriv",
    "bessel_i_scaled_pair",
    "bessel_j",
    "bessel_j_deriv",
    "bessel_j_deriv_zero",
    "bessel_j_pair",
    "bessel_zero",
    "bessel_zeros",
]


def backend_name():
    """Which kernel implementation is active: 'compiled' or 'pure'."""
    return "pure" if _impl is _pure else "compiled"


def _check_order_arg(v, x):
    if not (math.isfinite(v) and math.isfinite(x)):
        raise ValueError(f"order and argument must be finite, got v={v}, x={x}")
    if v < 0.0:
        raise ValueError(f"order must be nonnegative, got {v}")
    if x < 0.0:
        raise ValueError(f"argument must be nonnegative, got {x}")


def bessel_j(v: float, x: float) -> float:
    """Bessel function of the first kind J_v(x), v >= 0, x >= 0."""
    _check_order_arg(v, x)
    return _impl.bessel_j(v, x)


def bessel_j_pair(v: float, x: float):
    """(J_v(x), J_{v+1}(x)), evaluated consistently from one kernel call."""
    _check_order_arg(v, x)
    return _impl.bessel_j_pair(v, x)


def bessel_j_deriv(v: float, x: float) -> float:
    """dJ_v/dx via J_v'(x) = (v/x) J_v(x) - J_{v+1}(x)."""
    _check_order_arg(v, x)
    if x == 0.0:
        if v == 1.0:
            return 0.5
        if v == 0.0 or v > 1.0:
            return 0.0
        raise ValueError(f"J_v'(0) diverges for 0 < v < 1 (v={v})")
    jv, jv1 = _impl.bessel_j_pair(v, x)
    return (v / x) * jv - jv1


def bessel_i(v: float, x: float) -> float:
    """Modified Bessel function I_v(x), v >= 0, 0 <= x <= 500."""
    _check_order_arg(v, x)
    if x > _I_OVERFLOW_GUARD:
        raise RangeError(f"I_v argument {x} exceeds the overflow guard {_I_OVERFLOW_GUARD}")
    return _impl.bessel_i(v, x)


def bessel_i_scaled_pair(v: float, x: float):
    """(e^-x I_v(x), e^-x I_{v+1}(x)); safe for any finite x >= 0."""
    _check_order_arg(v, x)
    return _impl.bessel_i_scaled_pair(v, x)


def bessel_i_deriv(v: float, x: float) -> float:
    """dI_v/dx via I_v'(x) = (v/x) I_v(x) + I_{v+1}(x)."""
    _check_order_arg(v, x)
    if x > _I_OVERFLOW_GUARD:
        raise RangeError(f"I_v argument {x} exceeds the overflow guard {_I_OVERFLOW_GUARD}")
    if x == 0.0:
        if v == 1.0:
            return 0.5
        if v == 0.0 or v > 1.0:
            return 0.0
        raise ValueError(f"I_v'(0) diverges for 0 < v < 1 (v={v})")
    return (v / x) * _impl.bessel_i(v, x) + _impl.bessel_i(v + 1.0, x)


@dataclass(frozen=True)
class BesselZero:
    """k-th positive zero of J_v; re-evaluates to a residual below tolerance."""

    order: float
    index: int
    value: float

    def __post_init__(self):
        if self.order < 0.0 or self.index < 1 or self.value <= 0.0:
            raise ValueError(f"invalid Bessel zero {self}")
        resid = abs(bessel_j(self.order, self.value))
        bound = 1e-10 * max(1.0, abs(bessel_j_deriv(self.order, self.value)))
        if resid >= bound:
            raise ConvergenceError(
                f"zero ({self.order}, {self.index}) residual {resid:.3e} exceeds {bound:.3e}"
            )


def bessel_zeros(v: float, kmax: int) -> list[BesselZero]:
    """First kmax positive zeros of J_v, strictly increasing."""
    _check_order_arg(v, 0.0)
    if kmax < 1:
        raise ValueError(f"kmax must be >= 1, got {kmax}")
    roots = jv_zeros(_impl.bessel_j, _impl.bessel_j_pair, v, kmax)
    return [BesselZero(v, k + 1, r) for k, r in enumerate(roots)]


def bessel_zero(v: float, k: int) -> BesselZero:
    """k-th positive zero of J_v (k >= 1), absolute error well below 1e-10."""
    return bessel_zeros(v, k)[k - 1]


def bessel_j_deriv_zero(nu: float, k: int) -> float:
    """k-th positive root of d/dr [r^(1-n/2) J_{n/2}(r)] = 0, with nu = n/2 >= 1.

    These are the radial free-membrane (zero normal derivative) conditions
    on a ball; for n = 2 they reduce to the zeros of J_1'.
    """
    if not math.isfinite(nu) or nu < 1.0:
        raise ValueError(f"nu must be >= 1, got {nu}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return radial_neumann_roots(_impl.bessel_j_pair, nu, k)[k - 1]
