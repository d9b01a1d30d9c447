"""Hurwitz zeta and Lerch Phi for real z in [0, 1], s > 1, a > 0.

``hurwitz_zeta`` uses Euler-Maclaurin summation; ``lerch_phi`` sums the
defining series directly and stops on a rigorous tail bound. Rounding
error of the summation is folded into every reported ``error_bound``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ToleranceError, WorkLimitError
from .special_core import EPS, EvalResult, bernoulli_even

__all__ = [
    "LerchParams",
    "Z_SWITCH",
    "TERM_BUDGET",
    "MIN_TOL",
    "hurwitz_zeta",
    "lerch_phi",
    "lerch_tail_bound",
]

Z_SWITCH = 0.99
TERM_BUDGET = 5_000_000
MIN_TOL = 1e-14

_CHUNK = 1_000_000


@dataclass(frozen=True)
class LerchParams:
    z: float
    s: float
    a: float

    def __post_init__(self):
        z, s, a = self.z, self.s, self.a
        if not (0.0 <= z <= 1.0):
            raise DomainError(f"z must lie in [0, 1], got {z!r}")
        if not (s > 1.0) or not math.isfinite(s):
            raise DomainError(f"s must be a finite number > 1, got {s!r}")
        if not (a > 0.0) or not math.isfinite(a):
            raise DomainError(f"a must be a finite number > 0, got {a!r}")


def _check_tol(tol):
    if not (tol >= MIN_TOL):
        raise ToleranceError(f"tol must be >= {MIN_TOL:g}, got {tol!r}")


def _term_rel_err(s):
    # (k + a) rounds by eps/2, amplified by s through the power; pow, the
    # z**k factor and the division add about one ulp each.
    return (0.5 * s + 3.0) * EPS


def hurwitz_zeta(s: float, a: float, tol: float = 1e-12) -> EvalResult:
    """Hurwitz zeta(s, a) = sum_{k>=0} (k + a)**-s for s > 1, a > 0.

    Sums the first N terms directly, then adds the integral term, the
    half term and Bernoulli corrections at k = N. The corrections of
    (x + a)**-s alternate in sign with decreasing magnitude once they
    start shrinking, so the first omitted one bounds the remainder.
    ``work`` counts directly summed terms plus correction terms.
    """
    LerchParams(1.0, s, a)
    _check_tol(tol)

    n = max(math.ceil(10 + abs(s)), math.ceil(a) + 10)
    n_bern = 10
    while True:
        k = np.arange(n, dtype=float)
        head_terms = np.power(k + a, -s)
        head = math.fsum(head_terms)
        x = n + a
        integral = x ** (1.0 - s) / (s - 1.0)
        half = 0.5 * x**-s

        corrections = []
        omitted = math.inf
        rising = s  # s (s+1) ... (s + 2j - 2)
        factorial = 2.0  # (2j)!
        power = x ** (-s - 1.0)  # x**(-s - 2j + 1)
        for j in range(1, n_bern + 1):
            term = bernoulli_even(j) / factorial * rising * power
            if abs(term) < tol / 4 or j == n_bern:
                omitted = abs(term)
                break
            if corrections and abs(term) > abs(corrections[-1]):
                # asymptotic series has started to diverge at this N
                omitted = math.inf
                break
            corrections.append(term)
            rising *= (s + 2 * j - 1) * (s + 2 * j)
            factorial *= (2 * j + 1) * (2 * j + 2)
            power /= x * x

        if omitted <= tol / 2:
            break
        n *= 2
        if n > TERM_BUDGET:
            raise WorkLimitError(f"hurwitz_zeta({s!r}, {a!r}) needs more than {TERM_BUDGET} terms")

    tail = math.fsum([integral, half, *corrections])
    value = head + tail
    rounding = (
        _term_rel_err(s) * head
        + 4 * EPS * (abs(integral) + abs(half))
        + 8 * EPS * sum(abs(c) for c in corrections)
        + EPS * abs(value)
    )
    return EvalResult(value, omitted + rounding, n + len(corrections))


def lerch_tail_bound(p: LerchParams, n: int) -> float:
    """Geometric bound z**(n+1) / ((n+1+a)**s (1-z)) on sum_{k>n} z**k/(k+a)**s."""
    if p.z == 1.0:
        raise DomainError("geometric tail bound needs z < 1")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n!r}")
    if p.z == 0.0:
        return 0.0
    return math.exp((n + 1) * math.log(p.z) - p.s * math.log(n + 1 + p.a)) / (1.0 - p.z)


def _integral_tail_bound(p: LerchParams, n: int) -> float:
    """Bound on sum_{k>n} via the integral of z**x (x+a)**-s over [n, inf).

    The summand decreases in k, so the sum is below the integral, which
    in turn is below both z**n (n+a)**(1-s)/(s-1) and
    z**n (n+a)**-s / (-ln z).
    """
    log_z = math.log(p.z)
    base = n * log_z - p.s * math.log(n + p.a)
    by_power = math.exp(base + math.log(n + p.a)) / (p.s - 1.0)
    by_exp = math.exp(base) / -log_z
    return min(by_power, by_exp)


def _tail_bound(p: LerchParams, n: int) -> float:
    geometric = lerch_tail_bound(p, n)
    if p.z < Z_SWITCH:
        return geometric
    return min(geometric, _integral_tail_bound(p, n))


def _terms_needed(p: LerchParams, target: float) -> int:
    """Smallest n with _tail_bound(p, n) <= target, raising past the budget."""
    if _tail_bound(p, 0) <= target:
        return 0
    hi = 1
    while _tail_bound(p, hi) > target:
        if hi > TERM_BUDGET:
            raise WorkLimitError(
                f"Phi({p.z!r}, {p.s!r}, {p.a!r}) needs more than {TERM_BUDGET} terms "
                f"for a tail below {target:.3g}"
            )
        hi *= 2
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _tail_bound(p, mid) <= target:
            hi = mid
        else:
            lo = mid
    return hi


def lerch_phi(p: LerchParams, tol: float = 1e-12, rtol: float | None = None) -> EvalResult:
    """Lerch Phi(z, s, a) = sum_{k>=0} z**k / (k + a)**s.

    Sums k = 0..N where N is the first index whose tail bound is within
    ``tol``; at z = 1 this is :func:`hurwitz_zeta`. Passing ``rtol``
    additionally requires the tail to be within ``rtol`` times the
    leading term a**-s, which callers use to get full relative accuracy
    when the value itself is far from ``tol``.

    Raises:
        WorkLimitError: if more than TERM_BUDGET terms would be needed.
    """
    _check_tol(tol)
    z, s, a = p.z, p.s, p.a
    if z == 1.0:
        return hurwitz_zeta(s, a, tol)

    lead = a**-s
    if z == 0.0:
        return EvalResult(lead, _term_rel_err(s) * lead, 1)

    target = tol if rtol is None else min(tol, rtol * lead)
    n = _terms_needed(p, target)
    if n + 1 > TERM_BUDGET:
        raise WorkLimitError(f"Phi({z!r}, {s!r}, {a!r}) needs {n + 1} terms, budget {TERM_BUDGET}")

    partials = []
    for start in range(0, n + 1, _CHUNK):
        k = np.arange(start, min(n + 1, start + _CHUNK), dtype=float)
        partials.append(math.fsum(np.power(z, k) / np.power(k + a, s)))
    value = math.fsum(partials)
    tail = _tail_bound(p, n)
    err = tail + _term_rel_err(s) * value + EPS * value
    return EvalResult(value, err, n + 1)
