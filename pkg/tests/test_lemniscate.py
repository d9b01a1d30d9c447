import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from arcsl_bounds.errors import DomainError, ToleranceError
from arcsl_bounds.lemniscate import (
    X_SERIES,
    arcsl,
    arcsl_derivative,
    arcsl_one,
    arcsl_signed,
    lemniscate_arc_length,
    quadrature_path,
    series_path,
)
from arcsl_bounds.special_core import EPS, beta

# mpmath, 30 digits
ARCSL_HALF = 0.503209443177330887
ARCSL_0_9 = 0.986675704681559799
ARCSL_0_999 = 1.27939809267591299
ARCSL_ONE = 1.31102877714605990
ARC_LENGTH_1 = 7.41629870920548767


@pytest.mark.parametrize(
    "x, expected",
    [(0.0, 0.0), (0.5, ARCSL_HALF), (0.9, ARCSL_0_9), (0.999, ARCSL_0_999), (1.0, ARCSL_ONE)],
)
@pytest.mark.parametrize("tol", [1e-6, 1e-10, 1e-13])
def test_arcsl_examples(x, expected, tol):
    r = arcsl(x, tol)
    assert abs(r.value - expected) <= r.error_bound <= tol


def test_arcsl_against_mpmath():
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 30
    for x in np.linspace(0.0, 1.0, 201):
        x = float(x)
        exact = mpmath.quad(lambda t: 1 / mpmath.sqrt(1 - t**4), [0, x])
        r = arcsl(x, 1e-13)
        assert abs(mpmath.mpf(r.value) - exact) <= r.error_bound


def test_rtol_keeps_relative_accuracy_at_small_x():
    for x in (1e-8, 1e-4, 0.01):
        r = arcsl(x, 1e-10, rtol=1e-16)
        assert r.error_bound <= 8 * EPS * r.value


@pytest.mark.parametrize("x", [-0.1, 1.0000001, math.nan])
def test_domain(x):
    with pytest.raises(DomainError):
        arcsl(x)


def test_tolerance_floor():
    with pytest.raises(ToleranceError):
        arcsl(0.5, 1e-14)


def test_arcsl_one_matches_quadrature():
    one, quad = arcsl_one(), arcsl(1.0, 1e-13)
    assert abs(one.value - ARCSL_ONE) <= one.error_bound
    assert abs(one.value - quad.value) <= one.error_bound + quad.error_bound
    assert 4 * one.value == beta(0.25, 0.5).value


def test_paths_agree_across_switch():
    for x in np.linspace(0.85, 0.95, 20):
        s = series_path(float(x), 1e-13)
        q = quadrature_path(float(x), 1e-13)
        assert abs(s.value - q.value) <= s.error_bound + q.error_bound
    assert X_SERIES == 0.9


def test_derivative_matches_finite_difference():
    h = 1e-5
    for x in np.linspace(0.05, 0.9, 50):
        x = float(x)
        fd = (arcsl(x + h, 1e-13).value - arcsl(x - h, 1e-13).value) / (2 * h)
        assert abs(fd - arcsl_derivative(x)) <= 1e-6


def test_derivative_examples():
    assert arcsl_derivative(0.0) == 1.0
    assert arcsl_derivative(0.5) == pytest.approx(1 / math.sqrt(0.9375), rel=1e-15)
    assert arcsl_derivative(0.999999) > 300
    with pytest.raises(DomainError):
        arcsl_derivative(1.0)


def test_strictly_increasing_and_above_identity():
    xs = np.linspace(0.0, 1.0, 500)
    vals = [arcsl(float(x), rtol=EPS) for x in xs]
    for a, b in zip(vals, vals[1:]):
        assert b.value - a.value > a.error_bound + b.error_bound
    for x, v in zip(xs[1:-1], vals[1:-1]):
        assert x < v.value < ARCSL_ONE


@given(st.floats(min_value=1e-6, max_value=1.0 - 1e-9))
def test_bound_sanity(x):
    v = arcsl(x, rtol=EPS).value
    assert x <= v < arcsl_one().value
    # arcsl(x) - x is about x**5 / 10, visible once it exceeds an ulp of x
    if x**4 / 10 > 2 * EPS:
        assert v > x


@given(st.floats(min_value=-1.0, max_value=1.0))
def test_odd_symmetry(x):
    assert arcsl_signed(-x).value == -arcsl_signed(x).value


def test_arc_length():
    assert lemniscate_arc_length(0.0).value == 0.0
    one = lemniscate_arc_length(1.0)
    assert abs(one.value - ARC_LENGTH_1) <= one.error_bound
    assert lemniscate_arc_length(2.0).value == 2 * one.value
    with pytest.raises(DomainError):
        lemniscate_arc_length(-1.0)
