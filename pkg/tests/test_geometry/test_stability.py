from fractions import Fraction

import numpy as np
import pytest

from ergm_geometry.core.errors import ConfigurationError
from ergm_geometry.geometry.stability import (
    certify_product_form,
    falsify_stability,
    wagner_gap,
    wagner_gap_exact,
)
from ergm_geometry.geometry.verdicts import StabilityOutcome
from ergm_geometry.models.bernoulli import bernoulli_distribution
from ergm_geometry.models.bernoulli_params import BernoulliParams
from ergm_geometry.models.markov import markov_distribution
from ergm_geometry.models.markov_params import MarkovParams
from ergm_geometry.polynomials.multiaffine import MultiAffinePoly, generating_polynomial


@pytest.fixture
def not_stable():
    """(1 + x0 x1) / 2"""
    return MultiAffinePoly(2, [0.5, 0.0, 0.0, 0.5])


def test_wagner_gap_of_monomial():
    """x0 x1 has gap 0 everywhere"""
    g = MultiAffinePoly(2, [0.0, 0.0, 0.0, 1.0])
    assert wagner_gap(g, [3.0, -7.0], 0, 1) == 0.0


def test_wagner_gap_at_origin(not_stable):
    assert wagner_gap(not_stable, [0.0, 0.0], 0, 1) == pytest.approx(-0.25)
    assert wagner_gap_exact(not_stable, [0, 0], 0, 1) == Fraction(-1, 4)


def test_wagner_gap_needs_distinct_indices(not_stable):
    with pytest.raises(ConfigurationError, match="distinct indices"):
        wagner_gap(not_stable, [0.0, 0.0], 1, 1)


@pytest.mark.slow
def test_bernoulli_gap_vanishes(bernoulli_instances):
    """Independent edges: the Wagner gap is zero at 1000 points on each of 20 hosts"""
    rng = np.random.default_rng(11)
    for dist in bernoulli_instances:
        poly = generating_polynomial(dist)
        m = poly.m
        for _ in range(1000):
            x = rng.standard_cauchy(m)
            for i in range(m):
                for j in range(i + 1, m):
                    gap = wagner_gap(poly, x, i, j)
                    scale = max(1.0, abs(poly.coeffs).sum() * np.prod(1 + np.abs(x)) ** 2)
                    assert abs(gap) <= 1e-9 * scale


def test_falsifier_finds_origin_violation(not_stable):
    verdict = falsify_stability(not_stable, budget=1000, seed=0)
    assert verdict.outcome == StabilityOutcome.VIOLATION
    assert verdict.is_violation
    assert verdict.witness.pair == (0, 1)
    assert verdict.witness.gap < 0
    assert wagner_gap_exact(not_stable, list(verdict.witness.point), 0, 1) < 0
    assert 0 < verdict.evaluations <= 1000


def test_falsifier_edge_triangle_positive_beta(k3):
    """A positive triangle coefficient breaks stability"""
    dist = markov_distribution(k3, MarkovParams.edge_triangle_model(0.0, 0.5))
    verdict = falsify_stability(generating_polynomial(dist), budget=5000, seed=1)
    assert verdict.is_violation
    i, j = verdict.witness.pair
    poly = generating_polynomial(dist)
    assert wagner_gap_exact(poly, list(verdict.witness.point), i, j) < 0


def test_falsifier_no_violation_on_bernoulli(k3):
    poly = generating_polynomial(bernoulli_distribution(k3, BernoulliParams(p=(0.2, 0.6, 0.7))))
    verdict = falsify_stability(poly, budget=20_000, seed=3)
    assert verdict.outcome == StabilityOutcome.NO_VIOLATION_FOUND
    assert verdict.witness is None
    assert verdict.evaluations <= 20_000


def test_falsifier_is_deterministic(k3, cubic):
    dist = markov_distribution(k3, cubic(beta2=0.8, beta=0.0))
    poly = generating_polynomial(dist)
    first = falsify_stability(poly, budget=3000, seed=42)
    second = falsify_stability(poly, budget=3000, seed=42)
    assert first == second


def test_falsifier_independent_of_threads(k3, cubic):
    """Start-indexed budget slices make the verdict thread-count independent"""
    poly = generating_polynomial(markov_distribution(k3, cubic(beta2=-0.1, beta=0.0)))
    single = falsify_stability(poly, budget=4000, seed=5, threads=1)
    pooled = falsify_stability(poly, budget=4000, seed=5, threads=4)
    assert single.outcome == pooled.outcome
    assert single.witness == pooled.witness


def test_falsifier_trivial_cases(not_stable):
    univariate = MultiAffinePoly(1, [0.3, 0.7])
    verdict = falsify_stability(univariate, budget=100)
    assert verdict.outcome == StabilityOutcome.CERTIFIED_STABLE
    assert verdict.certificate == "univariate"
    zero = falsify_stability(not_stable, budget=0)
    assert zero.outcome == StabilityOutcome.NO_VIOLATION_FOUND
    assert zero.evaluations == 0
    with pytest.raises(ConfigurationError):
        falsify_stability(not_stable, budget=-1)
    with pytest.raises(ConfigurationError):
        falsify_stability(not_stable, budget=10, threads=0)


def test_certify_product_form(k3, not_stable):
    bern = generating_polynomial(bernoulli_distribution(k3, BernoulliParams(p=(0.1, 0.5, 0.8))))
    verdict = certify_product_form(bern)
    assert verdict.outcome == StabilityOutcome.CERTIFIED_STABLE
    assert verdict.certificate == "product-form"
    assert certify_product_form(not_stable).outcome == StabilityOutcome.NO_VIOLATION_FOUND
    uniform = generating_polynomial(markov_distribution(k3, MarkovParams.zeros(1)))
    assert certify_product_form(uniform).outcome == StabilityOutcome.CERTIFIED_STABLE


def test_verdict_to_dict(not_stable):
    data = falsify_stability(not_stable, budget=1000).to_dict()
    assert data["outcome"] == "violation"
    assert data["witness"]["pair"] == [0, 1]
    assert data["certificate"] is None
