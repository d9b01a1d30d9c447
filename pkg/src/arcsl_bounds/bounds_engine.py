"""Two-sided bounds for arcsl(x) in terms of v(x) = x Phi(x**4, 3/2, 1/4).

For 0 < x < 1,

    ALPHA * v(x) < arcsl(x) < kappa * v(x),

with kappa = 1/4 (legacy bound) or kappa = beta = arcsl(1) / zeta(3/2, 1/4)
(sharp bound). Both constants are the endpoint limits of the ratio
F(x) = arcsl(x) / v(x), which increases from 1/8 to beta on (0, 1).

The module also exposes the pieces of the monotonicity argument: the
auxiliary function h(s), the two routes to u'/v', and the coefficients
a_k, plus grid sweeps that check every claim numerically. A check passes
only when it holds by more than the propagated error bounds.
"""

from __future__ import annotations

import functools
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import DomainError, GammaOverflowError, ToleranceError, WorkLimitError
from .lemniscate import arcsl, arcsl_derivative, arcsl_one, X_SERIES
from .special_core import EPS, EvalResult, beta, central_binomial_ratios, gamma
from .zeta_lerch import LerchParams, hurwitz_zeta, lerch_phi

__all__ = [
    "ALPHA",
    "LEGACY_FACTOR",
    "MODES",
    "SPACINGS",
    "GridSpec",
    "ConstantsBundle",
    "BoundCheckRecord",
    "VerificationReport",
    "constants_bundle",
    "beta_constant",
    "ratio_F",
    "ratio_excess",
    "bound_pair",
    "envelope",
    "h_func",
    "v_prime",
    "ratio_uprime_vprime",
    "coefficient_a",
    "coefficients_a",
    "monotone_check",
    "verify_bounds",
    "verify_monotonicity",
]

ALPHA = 0.125
LEGACY_FACTOR = 0.25
MODES = ("legacy", "sharp")
SPACINGS = ("uniform", "endpoint-refined")

_S = 1.5
_A = 0.25
_EVAL_ERRORS = (DomainError, ToleranceError, WorkLimitError, GammaOverflowError, FloatingPointError)


@dataclass(frozen=True)
class GridSpec:
    """Evaluation grid on a subinterval of (0, 1).

    ``endpoint-refined`` spaces the lower half geometrically in x and the
    upper half geometrically in 1 - x, so points crowd toward both ends.
    """

    x_min: float
    x_max: float
    count: int
    spacing: str = "uniform"

    def __post_init__(self):
        if not (0.0 < self.x_min < self.x_max < 1.0):
            raise DomainError(f"grid needs 0 < x_min < x_max < 1, got [{self.x_min!r}, {self.x_max!r}]")
        if not isinstance(self.count, int) or self.count < 2:
            raise DomainError(f"grid needs count >= 2, got {self.count!r}")
        if self.spacing not in SPACINGS:
            raise DomainError(f"spacing must be one of {SPACINGS}, got {self.spacing!r}")

    def points(self) -> tuple[float, ...]:
        lo, hi, n = self.x_min, self.x_max, self.count
        if self.spacing == "uniform":
            xs = np.linspace(lo, hi, n)
        else:
            mid = 0.5 * (lo + hi)
            n_lo = (n + 1) // 2
            lower = np.geomspace(lo, mid, n_lo)
            gaps = np.geomspace(1.0 - hi, 1.0 - mid, n - n_lo + 1)[:-1]
            xs = np.concatenate((lower, (1.0 - gaps)[::-1]))
        xs[0], xs[-1] = lo, hi
        return tuple(float(x) for x in xs)


@dataclass(frozen=True)
class ConstantsBundle:
    alpha: EvalResult
    beta: EvalResult
    arcsl_one: EvalResult
    zeta_3half_quarter: EvalResult
    gamma_quarter: EvalResult
    beta_func_value: EvalResult

    def as_dict(self) -> dict[str, EvalResult]:
        """Constants keyed by their external (CLI/JSON) names."""
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "arcsl_one": self.arcsl_one,
            "zeta_3half_quarter": self.zeta_3half_quarter,
            "gamma_quarter": self.gamma_quarter,
            "beta_quarter_half": self.beta_func_value,
        }


@dataclass(frozen=True)
class BoundCheckRecord:
    """One grid point of a bound check.

    Margins are net of the combined error bounds of the two compared
    quantities, so both are positive exactly when the point passes.
    ``message`` is set when evaluation at ``x`` failed.
    """

    x: float
    lower: float
    value: float
    upper: float
    ratio: float
    lower_margin: float
    upper_margin: float
    error_bound: float = 0.0
    ratio_error: float = 0.0
    message: str | None = None

    @property
    def passed(self) -> bool:
        return self.message is None and self.lower_margin > 0 and self.upper_margin > 0


@dataclass(frozen=True)
class VerificationReport:
    grid: GridSpec
    mode: str
    passed: bool
    violations: tuple[BoundCheckRecord, ...]
    min_ratio: float
    max_ratio: float
    monotone: bool
    max_adjacent_decrease: float
    upper_factor: float
    records: tuple[BoundCheckRecord, ...] = field(repr=False, default=())
    strictly_increasing: bool | None = None

    def summary(self) -> dict:
        return {
            "grid": asdict(self.grid),
            "mode": self.mode,
            "upper_factor": self.upper_factor,
            "passed": self.passed,
            "violation_count": len(self.violations),
            "min_ratio": self.min_ratio,
            "max_ratio": self.max_ratio,
            "monotone": self.monotone,
            "max_adjacent_decrease": self.max_adjacent_decrease,
            "strictly_increasing": self.strictly_increasing,
        }


def _open_unit(x):
    if not (0.0 < x < 1.0):
        raise DomainError(f"x must lie in the open interval (0, 1), got {x!r}")


def _mode_factor(mode, tol):
    if mode == "legacy":
        return LEGACY_FACTOR, 0.0
    if mode == "sharp":
        b = beta_constant(max(tol, 1e-12))
        return b.value, b.error_bound
    raise DomainError(f"mode must be one of {MODES}, got {mode!r}")


@functools.lru_cache(maxsize=8)
def beta_constant(tol: float = 1e-12) -> EvalResult:
    """beta = arcsl(1) / zeta(3/2, 1/4) = 0.12836..."""
    if not (tol >= 1e-12):
        raise ToleranceError(f"tol must be >= 1e-12, got {tol!r}")
    num = arcsl_one()
    den = hurwitz_zeta(_S, _A, min(tol, 1e-13))
    value = num.value / den.value
    err = value * (num.relative_error + den.relative_error + EPS)
    return EvalResult(value, err, num.work + den.work)


def constants_bundle(tol: float = 1e-12) -> ConstantsBundle:
    b = beta_constant(tol)
    return ConstantsBundle(
        alpha=EvalResult(ALPHA, 0.0, 0),
        beta=b,
        arcsl_one=arcsl_one(),
        zeta_3half_quarter=hurwitz_zeta(_S, _A, min(tol, 1e-13)),
        gamma_quarter=gamma(0.25),
        beta_func_value=beta(0.25, 0.5),
    )


def _z_dphi_bound(z):
    # z Phi'(z) = sum_k k z**k (k + 1/4)**-1.5 <= sum_{k>=1} z**k / sqrt(k)
    #           <= z (1 + sqrt(pi / (1 - z)))
    return z * (1.0 + math.sqrt(math.pi / (1.0 - z)))


def _v(x, tol):
    """v(x) = x Phi(x**4, 3/2, 1/4) at full relative accuracy."""
    y = x**4
    phi = lerch_phi(LerchParams(y, _S, _A), max(tol, 1e-14), rtol=EPS)
    value = x * phi.value
    # y = x**4 carries a relative rounding error of at most eps
    arg_err = EPS * x * _z_dphi_bound(y)
    return EvalResult(value, x * phi.error_bound + EPS * value + arg_err, phi.work)


@functools.lru_cache(maxsize=65536)
def _point(x, tol):
    return arcsl(x, max(tol, 1e-13), rtol=EPS), _v(x, tol)


def ratio_F(x: float, tol: float = 1e-10) -> EvalResult:
    """F(x) = arcsl(x) / (x Phi(x**4, 3/2, 1/4)) for 0 < x < 1.

    The limits F(0+) = 1/8 and F(1-) = beta are available as constants.
    """
    _open_unit(x)
    u, v = _point(x, tol)
    value = u.value / v.value
    err = value * (u.relative_error + v.relative_error + EPS)
    return EvalResult(value, err, u.work + v.work)


def ratio_excess(x: float, tol: float = 1e-10) -> EvalResult:
    """F(x) - 1/8 without cancellation for x <= X_SERIES.

    Termwise, arcsl(x)/x - Phi(x**4)/8 = sum_{k>=1} d_k x**(4k) with
    d_k = c_k/(4k+1) - (4k+1)**-1.5 > 0, so the excess is
    sum_k d_k y**k / Phi(y). Above X_SERIES the direct difference is
    already accurate.
    """
    _open_unit(x)
    if x > X_SERIES:
        f = ratio_F(x, tol)
        return EvalResult(f.value - ALPHA, f.error_bound + EPS * ALPHA, f.work)
    v = _point(x, tol)[1]
    phi, phi_rel = v.value / x, v.relative_error + EPS
    y = x**4
    if y == 0.0:
        return EvalResult(0.0, 0.0, v.work)
    # d_k y**k <= c_k y**k / (4k+1), whose ratios stay below y
    n_est = max(2, math.ceil(math.log(EPS * (1.0 - y) / 10) / math.log(y)) + 2)
    k = np.arange(n_est + 2, dtype=float)
    upper_terms = central_binomial_ratios(n_est + 2) / (4 * k + 1) * np.power(y, k)
    d_terms = upper_terms - np.power(4 * k + 1, -1.5) * np.power(y, k)
    tails = upper_terms[1:] / (1.0 - y)
    stop = tails <= EPS * d_terms[1]
    n = int(np.argmax(stop)) if stop.any() else len(tails) - 1
    total = math.fsum(d_terms[1 : n + 1])
    rounding = EPS * float((4 * k[1 : n + 1] + 8) @ upper_terms[1 : n + 1])
    value = total / phi
    rel = (float(tails[n]) + rounding) / total + 2 * EPS + phi_rel
    return EvalResult(value, value * rel, n + v.work)


def bound_pair(x: float, mode: str = "sharp", tol: float = 1e-10) -> tuple[float, float]:
    """(lower, upper) = (ALPHA v(x), kappa v(x)), kappa = 1/4 or beta by mode."""
    _open_unit(x)
    kappa, _ = _mode_factor(mode, tol)
    v = _point(x, tol)[1].value
    return ALPHA * v, kappa * v


def envelope(x: float, tol: float = 1e-10) -> dict[str, float]:
    """arcsl(x) with its lower, sharp upper and legacy upper bounds and F(x)."""
    _open_unit(x)
    u, v = _point(x, tol)
    b = beta_constant(max(tol, 1e-12)).value
    return {
        "x": x,
        "arcsl": u.value,
        "lower": ALPHA * v.value,
        "upper_sharp": b * v.value,
        "upper_legacy": LEGACY_FACTOR * v.value,
        "F": u.value / v.value,
    }


def _inv_sqrt_series(y, target):
    """sum_{k>=0} y**k / sqrt(4k+1) with the tail below ``target``.

    Term ratios are below y, so the tail after term n is at most
    term(n+1) / (1 - y). Returns (value, error bound, terms used).
    """
    if y == 0.0:
        return 1.0, 0.0, 1
    n_est = max(1, math.ceil(math.log(target * (1.0 - y)) / math.log(y)))
    k = np.arange(n_est + 2, dtype=float)
    terms = np.power(y, k) / np.sqrt(4 * k + 1)
    tails = terms[1:] / (1.0 - y)
    n = int(np.argmax(tails <= target))
    used = terms[: n + 1]
    value = math.fsum(used)
    rounding = EPS * float((k[: n + 1] + 3) @ used) + EPS * value
    return value, float(tails[n]) + rounding, n + 1


def h_func(s: float, tol: float = 1e-12) -> EvalResult:
    """h(s) = sqrt(1 - s) sum_{k>=0} s**k / sqrt(4k+1) on [0, 1)."""
    if not (0.0 <= s < 1.0):
        raise DomainError(f"s must lie in [0, 1), got {s!r}")
    root = math.sqrt(1.0 - s)
    total, err, n = _inv_sqrt_series(s, tol / root)
    value = root * total
    return EvalResult(value, root * err + 2 * EPS * value, n)


def v_prime(x: float, tol: float = 1e-12) -> EvalResult:
    """v'(x) = 8 sum_{k>=0} x**(4k) / sqrt(4k+1), accumulated term by term."""
    if not (0.0 <= x < 1.0):
        raise DomainError(f"x must lie in [0, 1), got {x!r}")
    y = x * x
    y *= y
    total, power, k = 1.0, 1.0, 0
    rounding = 0.0
    while True:
        k += 1
        power *= y
        term = power / math.sqrt(4 * k + 1)
        if term / (1.0 - y) <= tol / 8:
            break
        total += term
        rounding += (k + 3) * term
    tail = term / (1.0 - y)
    value = 8.0 * total
    err = 8.0 * (tail + EPS * (rounding + k * total)) + EPS * value
    return EvalResult(value, err, k)


def ratio_uprime_vprime(x: float, tol: float = 1e-12, method: str = "h") -> EvalResult:
    """u'(x)/v'(x) with u = arcsl and v = x Phi(x**4, 3/2, 1/4).

    ``method="h"`` evaluates 1 / (8 h(x**4)); ``method="direct"`` divides
    arcsl'(x) by v'(x). The two routes must agree.
    """
    _open_unit(x)
    if method == "h":
        h = h_func(x**4, tol)
        value = 1.0 / (8.0 * h.value)
        return EvalResult(value, value * (h.relative_error + 2 * EPS), h.work)
    if method == "direct":
        vp = v_prime(x, tol)
        value = arcsl_derivative(x) / vp.value
        return EvalResult(value, value * (vp.relative_error + 6 * EPS), vp.work)
    raise DomainError(f"method must be 'h' or 'direct', got {method!r}")


def coefficient_a(k: int) -> tuple[float, float]:
    """Coefficient a_k of the series for 2 sqrt(1-s) h'(s), in two forms.

    Returns ``(raw, rationalized)``: the difference
    (2k+2)/sqrt(4k+5) - (2k+1)/sqrt(4k+1), which cancels badly as k
    grows, and the equivalent
    -1 / ((2k+2)(4k+1) sqrt(4k+5) + (2k+1)(4k+5) sqrt(4k+1)),
    which is the one to trust.
    """
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k!r}")
    raw = (2 * k + 2) / math.sqrt(4 * k + 5) - (2 * k + 1) / math.sqrt(4 * k + 1)
    den = (2 * k + 2) * (4 * k + 1) * math.sqrt(4 * k + 5) + (2 * k + 1) * (4 * k + 5) * math.sqrt(4 * k + 1)
    return raw, -1.0 / den


def coefficients_a(k_max: int) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised :func:`coefficient_a` for k = 0 .. k_max."""
    if k_max < 0:
        raise DomainError(f"k_max must be >= 0, got {k_max!r}")
    k = np.arange(k_max + 1, dtype=float)
    raw = (2 * k + 2) / np.sqrt(4 * k + 5) - (2 * k + 1) / np.sqrt(4 * k + 1)
    den = (2 * k + 2) * (4 * k + 1) * np.sqrt(4 * k + 5) + (2 * k + 1) * (4 * k + 5) * np.sqrt(4 * k + 1)
    return raw, -1.0 / den


def monotone_check(values, errors=None) -> tuple[bool, float]:
    """Whether ``values`` never decrease by more than the adjacent errors.

    Returns ``(monotone, max_adjacent_decrease)`` where the decrease is
    the raw max of values[i] - values[i+1] (0.0 for fewer than 2 values).
    """
    v = np.asarray(values, dtype=float)
    if v.size < 2:
        return True, 0.0
    e = np.zeros_like(v) if errors is None else np.asarray(errors, dtype=float)
    drops = v[:-1] - v[1:]
    slack = e[:-1] + e[1:]
    ok = np.isfinite(drops) & (drops <= slack)
    return bool(np.all(ok)), float(np.max(drops))


def _record(x, tol, kappa, kappa_err):
    try:
        _open_unit(x)
        u, v = _point(x, tol)
    except _EVAL_ERRORS as exc:
        nan = math.nan
        return BoundCheckRecord(x, nan, nan, nan, nan, nan, nan, nan, nan, f"{type(exc).__name__}: {exc}")
    lower = ALPHA * v.value
    lower_err = ALPHA * v.error_bound
    upper = kappa * v.value
    upper_err = kappa * v.error_bound + kappa_err * v.value + EPS * upper
    lower_gap = u.value - lower
    upper_gap = upper - u.value
    lower_margin = lower_gap - (u.error_bound + lower_err + EPS * abs(lower_gap))
    upper_margin = upper_gap - (u.error_bound + upper_err + EPS * abs(upper_gap))
    ratio = u.value / v.value
    ratio_err = ratio * (u.relative_error + v.relative_error + EPS)
    return BoundCheckRecord(
        x, lower, u.value, upper, ratio, lower_margin, upper_margin,
        u.error_bound + max(lower_err, upper_err), ratio_err,
    )


@functools.lru_cache(maxsize=16)
def _sweep(grid, mode, tol, upper_factor):
    kappa, kappa_err = _mode_factor(mode, tol)
    if upper_factor is not None:
        kappa, kappa_err = float(upper_factor), 0.0
    records = tuple(_record(x, tol, kappa, kappa_err) for x in grid.points())
    return kappa, records


def _report(grid, mode, tol, upper_factor, passed_fn, strict=None):
    kappa, records = _sweep(grid, mode, tol, upper_factor)
    ratios = np.array([r.ratio for r in records])
    finite = ratios[np.isfinite(ratios)]
    monotone, drop = monotone_check(ratios, [r.ratio_error for r in records])
    violations = tuple(r for r in records if not passed_fn(r))
    return VerificationReport(
        grid=grid,
        mode=mode,
        passed=not violations,
        violations=violations,
        min_ratio=float(finite.min()) if finite.size else math.nan,
        max_ratio=float(finite.max()) if finite.size else math.nan,
        monotone=monotone,
        max_adjacent_decrease=drop,
        upper_factor=kappa,
        records=records,
        strictly_increasing=strict,
    )


def verify_bounds(
    grid: GridSpec, mode: str = "sharp", tol: float = 1e-10, upper_factor: float | None = None
) -> VerificationReport:
    """Check ALPHA v(x) < arcsl(x) < kappa v(x) at every grid point.

    ``upper_factor`` replaces kappa; it exists to witness sharpness by
    showing that a slightly smaller factor fails. Evaluation failures are
    reported as violations rather than raised.
    """
    if mode not in MODES:
        raise DomainError(f"mode must be one of {MODES}, got {mode!r}")
    return _report(grid, mode, tol, upper_factor, lambda r: r.passed)


def verify_monotonicity(grid: GridSpec, tol: float = 1e-10, mode: str = "sharp") -> VerificationReport:
    """Check that F increases along the grid beyond its error bounds.

    ``passed`` equals ``monotone``; violations are the points where F
    dropped below its left neighbour by more than the combined error, or
    where evaluation failed.

    Near x = 0, F - 1/8 ~ 1.3e-3 x**4 falls below one ulp of 1/8, so F
    itself can only be checked for non-decrease there. The report's
    ``strictly_increasing`` flag instead compares :func:`ratio_excess`
    values, requiring every step to rise by more than the combined error.
    """
    if grid.count < 3:
        raise DomainError(f"monotonicity check needs count >= 3, got {grid.count}")
    _, records = _sweep(grid, mode, tol, None)
    bad = set()
    for left, right in zip(records, records[1:]):
        if right.message is not None or not (left.ratio - right.ratio <= left.ratio_error + right.ratio_error):
            bad.add(right.x)
    if records[0].message is not None:
        bad.add(records[0].x)
    strict = not bad and _strictly_increasing(grid, tol)
    return _report(grid, mode, tol, None, lambda r: r.x not in bad, strict)


def _strictly_increasing(grid, tol):
    try:
        excess = [ratio_excess(x, tol) for x in grid.points()]
    except _EVAL_ERRORS:
        return False
    return all(
        b.value - a.value > a.error_bound + b.error_bound for a, b in zip(excess, excess[1:])
    )
