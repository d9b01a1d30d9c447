"""Slow reference implementations for cross-checking the main paths.

Nothing here reuses the evaluation code of ``lemniscate`` or
``zeta_lerch``: quadrature is adaptive Simpson instead of Gauss-Kronrod,
powers of z are formed through exp/log and terms are accumulated by
a plain running sum, and arcsl is integrated after t = cos(theta) instead of
t = 1 - u**2. Agreement between the two sides is therefore evidence
rather than a tautology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import lemniscate, special_core, zeta_lerch
from .errors import CrosscheckError, DomainError, ToleranceError, WorkLimitError

__all__ = [
    "QuadResult",
    "CrosscheckReport",
    "quad_adaptive",
    "lerch_bruteforce",
    "arcsl_reference",
    "constants_crosscheck",
    "lerch_reference",
    "check_point",
]

MAX_SUBDIVISIONS = 100_000
MAX_TERMS = 100_000_000


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    subdivisions: int


def quad_adaptive(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-10,
    max_subdivisions: int = MAX_SUBDIVISIONS,
) -> QuadResult:
    """Adaptive Simpson quadrature with Richardson correction.

    Each panel compares Simpson on the whole panel with Simpson on its two
    halves; the difference / 15 estimates the error of the refined value,
    and adding it back gives a rule exact for quintics. A panel is
    accepted once its estimate is within its share of ``tol``.

    Raises:
        WorkLimitError: after ``max_subdivisions`` bisections.
        FloatingPointError: if ``f`` returns a non-finite sample.
    """
    if a > b:
        raise DomainError(f"need a <= b, got a={a!r}, b={b!r}")
    if a == b:
        return QuadResult(0.0, 0.0, 0)

    def sample(t):
        v = float(f(t))
        if not math.isfinite(v):
            raise FloatingPointError(f"integrand is {v!r} at t={t!r}")
        return v

    def simpson(fa, fm, fb, h):
        return h * (fa + 4.0 * fm + fb) / 6.0

    fa, fm, fb = sample(a), sample(0.5 * (a + b)), sample(b)
    # (lo, hi, f(lo), f(mid), f(hi), whole-panel Simpson, local tol)
    stack = [(a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), tol)]
    pieces = []
    errors = []
    subdivisions = 0
    while stack:
        lo, hi, flo, fmid, fhi, whole, local_tol = stack.pop()
        mid = 0.5 * (lo + hi)
        fl, fr = sample(0.5 * (lo + mid)), sample(0.5 * (mid + hi))
        left = simpson(flo, fl, fmid, mid - lo)
        right = simpson(fmid, fr, fhi, hi - mid)
        delta = left + right - whole
        if abs(delta) <= 15.0 * local_tol or mid in (lo, hi):
            pieces.append(left + right + delta / 15.0)
            errors.append(abs(delta) / 15.0)
            continue
        subdivisions += 1
        if subdivisions > max_subdivisions:
            raise WorkLimitError(f"quad_adaptive exceeded {max_subdivisions} subdivisions")
        stack.append((mid, hi, fmid, fr, fhi, right, 0.5 * local_tol))
        stack.append((lo, mid, flo, fl, fmid, left, 0.5 * local_tol))
    return QuadResult(math.fsum(pieces), math.fsum(errors), subdivisions)


def lerch_bruteforce(z: float, s: float, a: float, n_terms: int) -> tuple[float, float]:
    """Sum the first ``n_terms`` terms of Phi(z, s, a) in ascending order.

    Returns ``(partial, tail_high)`` where ``tail_high`` bounds the
    remainder: z**n / ((n+a)**s (1-z)) for z < 1, and
    integral_{n-1}^inf (x+a)**-s dx for z = 1.
    """
    if not (0.0 <= z <= 1.0) or not (s > 1.0) or not (a > 0.0):
        raise DomainError(f"need z in [0,1], s > 1, a > 0; got z={z!r}, s={s!r}, a={a!r}")
    if not 1 <= n_terms <= MAX_TERMS:
        raise WorkLimitError(f"n_terms must be in [1, {MAX_TERMS}], got {n_terms!r}")

    running = 0.0
    chunk = 1 << 20
    for start in range(0, n_terms, chunk):
        k = np.arange(start, min(n_terms, start + chunk), dtype=float)
        terms = np.power(k + a, -s)
        if z == 0.0:
            terms = np.where(k == 0, terms, 0.0)
        elif z != 1.0:
            terms = terms * np.exp(k * math.log(z))
        # cumsum is a left-to-right running sum
        running = float(np.cumsum(np.concatenate(([running], terms)))[-1])

    n = n_terms
    if z == 1.0:
        tail = (n - 1 + a) ** (1.0 - s) / (s - 1.0)
    elif z == 0.0:
        tail = 0.0
    else:
        tail = math.exp(n * math.log(z) - s * math.log(n + a)) / (1.0 - z)
    return running, tail


def arcsl_reference(x: float, tol: float = 1e-12) -> QuadResult:
    """arcsl(x) as integral_{arccos x}^{pi/2} d(theta) / sqrt(1 + cos(theta)**2).

    With t = cos(theta), 1 - t**4 = sin(theta)**2 (1 + cos(theta)**2), so
    the integrand is smooth up to and including x = 1.
    """
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"x must lie in [0, 1], got {x!r}")
    return quad_adaptive(lambda th: 1.0 / math.sqrt(1.0 + math.cos(th) ** 2), math.acos(x), 0.5 * math.pi, tol)


@dataclass(frozen=True)
class CrosscheckReport:
    values: dict = field(default_factory=dict)
    spread: float = 0.0
    tol: float = 0.0

    @property
    def mean(self) -> float:
        return math.fsum(self.values.values()) / len(self.values)


def constants_crosscheck(tol: float = 1e-10) -> CrosscheckReport:
    """Compute beta = arcsl(1) / zeta(3/2, 1/4) by three routes.

    * ``arcsl``: quadrature value of arcsl(1) (no Gamma involved);
    * ``beta_function``: B(1/4, 1/2) / 4;
    * ``gamma``: Gamma(1/4)**2 / sqrt(2 pi) / 4.

    All share the same zeta(3/2, 1/4). Raises CrosscheckError if any two
    differ by more than ``tol``.
    """
    if not (tol >= 1e-11):
        raise ToleranceError(f"tol must be >= 1e-11, got {tol!r}")
    zeta = zeta_lerch.hurwitz_zeta(1.5, 0.25, 1e-13).value
    g = special_core.gamma(0.25).value
    values = {
        "arcsl": lemniscate.arcsl(1.0, 1e-13).value / zeta,
        "beta_function": special_core.beta(0.25, 0.5).value / (4.0 * zeta),
        "gamma": g * g / (4.0 * math.sqrt(2.0 * math.pi) * zeta),
    }
    spread = max(values.values()) - min(values.values())
    if spread > tol:
        raise CrosscheckError(f"beta routes disagree by {spread:.3e} > {tol:.1e}: {values}", values)
    return CrosscheckReport(values, spread, tol)


def lerch_reference(z: float, s: float, a: float, tol: float = 1e-12) -> tuple[float, float, int]:
    """Brute-force Phi(z, s, a) for z < 1 with enough terms for a tail below ``tol``.

    Returns ``(partial, tail_high, n_terms)``.
    """
    if not (0.0 <= z < 1.0):
        raise DomainError(f"lerch_reference needs z in [0, 1), got {z!r}")
    n = 1
    while z > 0.0 and math.exp(n * math.log(z) - s * math.log(n + a)) / (1.0 - z) > tol:
        n += max(1, n // 4)
        if n > MAX_TERMS:
            raise WorkLimitError(f"Phi({z!r}, {s!r}, {a!r}) needs more than {MAX_TERMS} terms")
    return (*lerch_bruteforce(z, s, a, n), n)


def check_point(x: float, tol: float = 1e-10) -> dict:
    """Compare main-path arcsl(x) and Phi(x**4, 3/2, 1/4) with the oracle.

    Each comparison passes when the difference is within the sum of the
    main path's error bound and the oracle's error estimate (plus a few
    ulps of the value).
    """
    main_u = lemniscate.arcsl(x, max(tol, lemniscate.MIN_TOL))
    ref_u = arcsl_reference(x, tol)
    out = {
        "x": x,
        "arcsl": main_u.value,
        "arcsl_oracle": ref_u.value,
        "arcsl_ok": abs(main_u.value - ref_u.value)
        <= main_u.error_bound + ref_u.error_estimate + 8 * special_core.EPS * abs(ref_u.value),
    }
    z = x**4
    if z < 1.0:
        main_p = zeta_lerch.lerch_phi(zeta_lerch.LerchParams(z, 1.5, 0.25), max(tol, zeta_lerch.MIN_TOL))
        partial, tail, n = lerch_reference(z, 1.5, 0.25, tol)
        # the brute-force partial sum sits in [Phi - tail, Phi] up to the
        # worst-case rounding of an n-term running sum
        rounding = (n + 4) * special_core.EPS * partial
        out.update(
            phi=main_p.value,
            phi_oracle=partial,
            phi_ok=partial - rounding - main_p.error_bound
            <= main_p.value
            <= partial + tail + rounding + main_p.error_bound,
        )
    return out
