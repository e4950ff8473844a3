from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ergm_geometry.core.errors import GraphError
from ergm_geometry.models.markov import markov_distribution
from ergm_geometry.models.markov_params import MarkovParams
from ergm_geometry.polynomials.multiaffine import (
    MultiAffinePoly,
    bilinear_slice,
    evaluate,
    evaluate_exact,
    generating_polynomial,
    partial,
)


@pytest.fixture
def two_var():
    """g = 1 + 2 x0 + 3 x1 + 4 x0 x1"""
    return MultiAffinePoly(2, [1.0, 2.0, 3.0, 4.0])


def test_evaluate(two_var):
    assert evaluate(two_var, [0.5, -1.0]) == pytest.approx(1 + 1 - 3 - 2)
    expected = Fraction(1) + Fraction(2, 3) + 6 + Fraction(8, 3)
    assert evaluate_exact(two_var, [Fraction(1, 3), 2]) == expected


def test_evaluate_dimension_check(two_var):
    with pytest.raises(GraphError, match="expected 2"):
        evaluate(two_var, [1.0])
    with pytest.raises(GraphError):
        evaluate_exact(two_var, [1, 2, 3])


def test_coefficient_count_checked():
    with pytest.raises(GraphError, match="expected 4 coefficients"):
        MultiAffinePoly(2, [1.0, 2.0])


def test_partial(two_var):
    """d/dx0 (1 + 2 x0 + 3 x1 + 4 x0 x1) = 2 + 4 x1"""
    d0 = partial(two_var, 0)
    assert list(d0.coeffs) == [2.0, 0.0, 4.0, 0.0]
    d1 = partial(two_var, 1)
    assert list(d1.coeffs) == [3.0, 4.0, 0.0, 0.0]
    with pytest.raises(GraphError, match="out of range"):
        partial(two_var, 2)


def test_generating_polynomial_uniform(k3):
    dist = markov_distribution(k3, MarkovParams.zeros(1))
    poly = generating_polynomial(dist)
    assert evaluate(poly, [1.0, 1.0, 1.0]) == pytest.approx(1.0)
    raw = generating_polynomial(dist, normalized=False)
    assert evaluate(raw, [1.0, 1.0, 1.0]) == pytest.approx(8.0)


def test_bilinear_slice_two_vars(two_var):
    table = bilinear_slice(two_var, [0.0, 0.0], 0, 1)
    assert table.tolist() == [[1.0, 3.0], [2.0, 4.0]]


@settings(max_examples=40, deadline=None)
@given(
    coeffs=st.lists(st.floats(0.1, 5.0), min_size=16, max_size=16),
    x=st.lists(st.floats(-3.0, 3.0), min_size=4, max_size=4),
    pair=st.sampled_from([(0, 1), (0, 3), (2, 1), (1, 3)]),
)
def test_bilinear_slice_reconstructs_value(coeffs, x, pair):
    """The slice reproduces g at x and the mixed partial in its corner"""
    poly = MultiAffinePoly(4, coeffs)
    i, j = pair
    table = bilinear_slice(poly, x, i, j)
    value = (
        table[0, 0]
        + table[1, 0] * x[i]
        + table[0, 1] * x[j]
        + table[1, 1] * x[i] * x[j]
    )
    assert value == pytest.approx(evaluate(poly, x), rel=1e-9, abs=1e-9)
    mixed = evaluate(partial(partial(poly, i), j), x)
    assert table[1, 1] == pytest.approx(mixed, rel=1e-9, abs=1e-9)


@settings(max_examples=30, deadline=None)
@given(
    coeffs=st.lists(st.floats(-5.0, 5.0), min_size=8, max_size=8),
    i=st.integers(0, 2),
    j=st.integers(0, 2),
)
def test_partials_commute(coeffs, i, j):
    poly = MultiAffinePoly(3, coeffs)
    assert np.array_equal(partial(partial(poly, i), j).coeffs, partial(partial(poly, j), i).coeffs)


@settings(max_examples=50, deadline=None)
@given(
    coeffs=st.lists(st.integers(-20, 20), min_size=8, max_size=8),
    point=st.lists(st.fractions(-5, 5, max_denominator=12), min_size=3, max_size=3),
    i=st.integers(0, 2),
    h=st.fractions(-3, 3, max_denominator=7).filter(lambda h: h != 0),
)
def test_partial_matches_difference_quotient(coeffs, point, i, h):
    """A multiaffine g is linear in each variable, so the forward difference is exact"""
    g = MultiAffinePoly(3, [float(c) for c in coeffs])
    shifted = list(point)
    shifted[i] += h
    quotient = (evaluate_exact(g, shifted) - evaluate_exact(g, point)) / h
    assert quotient == evaluate_exact(partial(g, i), point)


def test_partial_matches_central_difference():
    rng = np.random.default_rng(4)
    g = MultiAffinePoly(4, rng.uniform(0.0, 1.0, size=16))
    x = rng.normal(size=4)
    for i in range(4):
        step = np.zeros(4)
        step[i] = 1e-4
        central = (evaluate(g, x + step) - evaluate(g, x - step)) / 2e-4
        assert central == pytest.approx(evaluate(partial(g, i), x), rel=1e-8, abs=1e-10)
