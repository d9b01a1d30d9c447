"""Arc lemniscate sine, Lerch Phi and Hurwitz zeta with error bounds, and
numerical verification of the sharp two-sided bounds

    x Phi(x**4, 3/2, 1/4) / 8 < arcsl(x) < beta x Phi(x**4, 3/2, 1/4),  0 < x < 1,

with beta = arcsl(1) / zeta(3/2, 1/4).
"""

from .bounds_engine import (
    ALPHA,
    GridSpec,
    beta_constant,
    bound_pair,
    constants_bundle,
    ratio_F,
    verify_bounds,
    verify_monotonicity,
)
from .errors import DomainError, ToleranceError, WorkLimitError
from .lemniscate import arcsl, arcsl_one, lemniscate_arc_length
from .special_core import EvalResult, beta, gamma, log_gamma
from .zeta_lerch import LerchParams, hurwitz_zeta, lerch_phi

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "DomainError",
    "EvalResult",
    "GridSpec",
    "LerchParams",
    "ToleranceError",
    "WorkLimitError",
    "arcsl",
    "arcsl_one",
    "beta",
    "beta_constant",
    "bound_pair",
    "constants_bundle",
    "gamma",
    "hurwitz_zeta",
    "lemniscate_arc_length",
    "lerch_phi",
    "log_gamma",
    "ratio_F",
    "verify_bounds",
    "verify_monotonicity",
]
