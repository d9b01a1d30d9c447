"""Arc lemniscate sine arcsl(x) = integral_0^x dt / sqrt(1 - t**4).

Two evaluation paths:

* power series sum_k c_k x**(4k+1) / (4k+1), with c_k = C(2k,k)/4**k, used
  for x <= X_SERIES where it converges geometrically in x**4;
* for x > X_SERIES, the series value at X_SERIES plus the integral from
  X_SERIES to x after substituting t = 1 - u**2, which turns the
  endpoint singularity at t = 1 into the smooth integrand
  2 / sqrt((2 - u**2)(1 + (1 - u**2)**2)).

The second path never touches Gamma, so arcsl(1) computed here is an
independent check on B(1/4, 1/2) / 4.
"""

from __future__ import annotations

import heapq
import math

import numpy as np

from .errors import DomainError, ToleranceError, WorkLimitError
from .special_core import EPS, EvalResult, beta, central_binomial_ratios

__all__ = [
    "X_SERIES",
    "MIN_TOL",
    "arcsl",
    "arcsl_signed",
    "arcsl_one",
    "arcsl_derivative",
    "lemniscate_arc_length",
    "series_path",
    "quadrature_path",
]

X_SERIES = 0.9
MIN_TOL = 1e-13
MAX_INTERVALS = 2000

# 15-point Kronrod rule with its embedded 7-point Gauss rule on [-1, 1].
_XK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])
_NODES = np.concatenate((-_XK[:-1], _XK[::-1]))
_KRONROD_W = np.concatenate((_WK[:-1], _WK[::-1]))
_GAUSS_W = np.zeros(15)
_GAUSS_W[1:7:2] = _WG[:3]
_GAUSS_W[7] = _WG[3]
_GAUSS_W[9:15:2] = _WG[2::-1]


def _gk15(f, a, b):
    half = 0.5 * (b - a)
    fx = f(0.5 * (a + b) + half * _NODES)
    if not np.all(np.isfinite(fx)):
        raise FloatingPointError(f"integrand not finite on [{a!r}, {b!r}]")
    kronrod = half * float(_KRONROD_W @ fx)
    gauss = half * float(_GAUSS_W @ fx)
    # |K - G| alone; K15 is far more accurate than G7 on smooth integrands,
    # so this overstates the error of the Kronrod value.
    roundoff = 50 * EPS * half * float(np.abs(fx) @ _KRONROD_W)
    return kronrod, abs(kronrod - gauss) + roundoff


def _integrate(f, a, b, tol):
    """Globally adaptive Gauss-Kronrod; returns (value, error, intervals)."""
    if a == b:
        return 0.0, 0.0, 0
    sign = 1.0
    if a > b:
        a, b, sign = b, a, -1.0
    value, err = _gk15(f, a, b)
    heap = [(-err, a, b, value)]
    total_err = err
    while total_err > tol:
        if len(heap) >= MAX_INTERVALS:
            raise WorkLimitError(f"quadrature needs more than {MAX_INTERVALS} subintervals")
        neg_err, lo, hi, _ = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        v1, e1 = _gk15(f, lo, mid)
        v2, e2 = _gk15(f, mid, hi)
        heapq.heappush(heap, (-e1, lo, mid, v1))
        heapq.heappush(heap, (-e2, mid, hi, v2))
        total_err += e1 + e2 + neg_err
    value = math.fsum(item[3] for item in heap)
    total_err = sum(-item[0] for item in heap)
    return sign * value, total_err, len(heap)


def _complement_integrand(u):
    t = 1.0 - u * u
    return 2.0 / np.sqrt((2.0 - u * u) * (1.0 + t * t))


def _check_x(x):
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"x must lie in [0, 1], got {x!r}")


def _check_tol(tol):
    if not (tol >= MIN_TOL):
        raise ToleranceError(f"tol must be >= {MIN_TOL:g}, got {tol!r}")


def series_path(x: float, target: float) -> EvalResult:
    """Power series for arcsl(x), x in [0, 1), truncated once the tail is
    at most ``target``.

    Term ratios are below y = x**4, so the tail after term n is at most
    term(n+1) / (1 - y).
    """
    if not (0.0 <= x < 1.0):
        raise DomainError(f"series path needs x in [0, 1), got {x!r}")
    if x == 0.0:
        return EvalResult(0.0, 0.0, 0)
    y = x**4
    if y == 0.0:
        return EvalResult(x, EPS * x, 1)
    # y**(n+1) * x / (1 - y) <= target, ignoring the c_k/(4k+1) <= 1 factor
    n_est = max(1, math.ceil(math.log(target * (1.0 - y) / x) / math.log(y)))
    k = np.arange(n_est + 2, dtype=float)
    terms = central_binomial_ratios(n_est + 2) * np.power(y, k) * x / (4 * k + 1)
    tails = terms[1:] / (1.0 - y)
    n = int(np.argmax(tails <= target))
    if tails[n] > target:
        n = len(tails) - 1
    used = terms[: n + 1]
    value = math.fsum(used)
    # c_k carries <= k roundings, y**k inherits k times the error of y.
    rounding = EPS * float((4 * k[: n + 1] + 4) @ used) + EPS * value
    return EvalResult(value, float(tails[n]) + rounding, n + 1)


def quadrature_path(x: float, tol: float) -> EvalResult:
    """arcsl(X_SERIES) plus the substituted integral from X_SERIES to x.

    Works for any x in [0, 1]; for x < X_SERIES the integral runs
    backwards. ``work`` is series terms plus quadrature subintervals.
    """
    _check_x(x)
    anchor = series_path(X_SERIES, tol / 2)
    u_anchor = math.sqrt(1.0 - X_SERIES)
    integral, q_err, intervals = _integrate(_complement_integrand, math.sqrt(1.0 - x), u_anchor, tol / 2)
    value = anchor.value + integral
    err = anchor.error_bound + q_err + 4 * EPS * abs(value)
    return EvalResult(value, err, anchor.work + intervals)


def arcsl(x: float, tol: float = 1e-12, rtol: float | None = None) -> EvalResult:
    """Arc lemniscate sine on [0, 1].

    ``rtol`` tightens the truncation target to ``rtol * x``, since
    arcsl(x) >= x; the bounds engine uses it to keep full relative
    accuracy for small x where an absolute ``tol`` would be meaningless.
    On the quadrature path the target never drops below MIN_TOL.
    """
    _check_x(x)
    _check_tol(tol)
    if x <= X_SERIES:
        target = tol if rtol is None else min(tol, rtol * x)
        if target == 0.0:
            return EvalResult(0.0, 0.0, 0)
        return series_path(x, target)
    if rtol is not None:
        tol = max(min(tol, rtol * x), MIN_TOL)
    return quadrature_path(x, tol)


def arcsl_signed(x: float, tol: float = 1e-12) -> EvalResult:
    """arcsl on [-1, 1] through arcsl(-x) = -arcsl(x)."""
    if not (-1.0 <= x <= 1.0):
        raise DomainError(f"x must lie in [-1, 1], got {x!r}")
    r = arcsl(abs(x), tol)
    return EvalResult(math.copysign(r.value, x), r.error_bound, r.work)


def arcsl_one() -> EvalResult:
    """The lemniscate constant arcsl(1) = B(1/4, 1/2) / 4."""
    b = beta(0.25, 0.5)
    return EvalResult(b.value / 4, b.error_bound / 4, b.work)


def arcsl_derivative(x: float) -> float:
    """1 / sqrt(1 - x**4) on [0, 1)."""
    if not (0.0 <= x < 1.0):
        raise DomainError(f"x must lie in [0, 1), got {x!r}")
    return 1.0 / math.sqrt(1.0 - x**4)


def lemniscate_arc_length(c: float) -> EvalResult:
    """Total arc length 4 sqrt(2) c arcsl(1) of the lemniscate with
    half focal distance ``c``."""
    if not (c >= 0.0) or not math.isfinite(c):
        raise DomainError(f"c must be a finite number >= 0, got {c!r}")
    one = arcsl_one()
    scale = 4.0 * math.sqrt(2.0) * c
    value = scale * one.value
    return EvalResult(value, scale * one.error_bound + 3 * EPS * value, one.work)
