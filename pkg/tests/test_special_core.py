import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcsl_bounds.errors import DomainError, GammaOverflowError
from arcsl_bounds.special_core import (
    EPS,
    EvalResult,
    bernoulli_even,
    beta,
    central_binomial_ratio,
    central_binomial_ratios,
    gamma,
    log_gamma,
)

# 30-digit reference values computed with mpmath and frozen here.
GAMMA_QUARTER = 3.62560990822190831
BETA_QUARTER_HALF = 5.24411510858423962


@pytest.mark.parametrize(
    "x, expected",
    [(1.0, 1.0), (0.5, math.sqrt(math.pi)), (5.0, 24.0), (0.25, GAMMA_QUARTER)],
)
def test_gamma_examples(x, expected):
    r = gamma(x)
    assert abs(r.value - expected) <= 1e-13 * expected
    assert abs(r.value - expected) <= r.error_bound


@pytest.mark.parametrize("x", [0.0, -1.0, math.nan, math.inf])
def test_gamma_rejects_outside_domain(x):
    with pytest.raises(DomainError):
        gamma(x)


def test_gamma_overflow():
    with pytest.raises(GammaOverflowError):
        gamma(200.0)


@pytest.mark.parametrize(
    "x, y, expected",
    [(1.0, 1.0, 1.0), (0.5, 0.5, math.pi), (0.25, 0.5, BETA_QUARTER_HALF)],
)
def test_beta_examples(x, y, expected):
    r = beta(x, y)
    assert abs(r.value - expected) <= 1e-12 * expected
    assert abs(r.value - expected) <= r.error_bound


def test_beta_rejects_nonpositive():
    with pytest.raises(DomainError):
        beta(0.0, 1.0)
    with pytest.raises(DomainError):
        beta(1.0, -2.0)


@pytest.mark.parametrize("x, expected", [(1.0, 0.0), (2.0, 0.0), (0.5, 0.5 * math.log(math.pi))])
def test_log_gamma_examples(x, expected):
    r = log_gamma(x)
    assert abs(r.value - expected) <= 1e-13
    assert abs(r.value - expected) <= r.error_bound


def test_gamma_against_mpmath():
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 30
    for x in np.linspace(0.01, 50, 500):
        x = float(x)
        exact = mpmath.gamma(x)
        r = gamma(x)
        assert abs(mpmath.mpf(r.value) - exact) <= r.error_bound
        assert abs(mpmath.mpf(r.value) / exact - 1) <= 1e-13
        lg = log_gamma(x)
        assert abs(mpmath.mpf(lg.value) - mpmath.loggamma(x)) <= min(lg.error_bound, 1e-13)


@given(st.floats(min_value=1e-3, max_value=20.0))
def test_gamma_recurrence(x):
    assert abs(gamma(x + 1).value - x * gamma(x).value) <= 1e-12 * gamma(x + 1).value


@settings(max_examples=100)
@given(st.floats(min_value=1e-3, max_value=5.0), st.floats(min_value=1e-3, max_value=5.0))
def test_beta_symmetric(x, y):
    a, b = beta(x, y).value, beta(y, x).value
    assert abs(a - b) <= 1e-13 * abs(a)


@pytest.mark.parametrize("x", [0.25, 0.75, 1.5])
def test_gamma_duplication(x):
    rhs = 2 ** (2 * x - 1) / math.sqrt(math.pi) * gamma(x).value * gamma(x + 0.5).value
    assert abs(gamma(2 * x).value - rhs) <= 1e-11 * abs(rhs)


@pytest.mark.parametrize("k, expected", [(0, 1.0), (1, 0.5), (2, 0.375), (3, 0.3125)])
def test_central_binomial_ratio_examples(k, expected):
    assert central_binomial_ratio(k) == expected
    assert central_binomial_ratios(k + 1)[k] == expected


def test_central_binomial_ratio_exact_against_integers():
    for k in (10, 50, 400, 600):
        exact = math.comb(2 * k, k) / 4**k
        assert abs(central_binomial_ratio(k) - exact) <= 2 * k * EPS * exact


def test_central_binomial_asymptotics():
    assert abs(central_binomial_ratio(1000) * math.sqrt(math.pi * 1000) - 1) < 0.1
    assert abs(central_binomial_ratio(100_000) * math.sqrt(math.pi * 100_000) - 1) < 0.01


def test_central_binomial_vector_matches_scalar():
    vec = central_binomial_ratios(200)
    for k in (0, 1, 17, 199):
        assert abs(vec[k] - central_binomial_ratio(k)) <= 4 * k * EPS * vec[k]
    assert central_binomial_ratios(0).size == 0


def test_central_binomial_rejects_negative():
    with pytest.raises(DomainError):
        central_binomial_ratio(-1)


@pytest.mark.parametrize("n, expected", [(1, 1 / 6), (2, -1 / 30), (3, 1 / 42), (10, -174611 / 330)])
def test_bernoulli_even(n, expected):
    assert bernoulli_even(n) == expected


@pytest.mark.parametrize("n", [0, 11])
def test_bernoulli_even_out_of_table(n):
    with pytest.raises(DomainError):
        bernoulli_even(n)


def test_eval_result_validation():
    r = EvalResult(2.0, 1e-10, 3)
    assert r.relative_error == pytest.approx(5e-11)
    with pytest.raises(ValueError):
        EvalResult(1.0, -1.0)
