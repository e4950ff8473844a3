import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ergm_geometry.core.errors import ConfigurationError, DomainError, GraphError
from ergm_geometry.geometry.lattice import negative_lattice_check
from ergm_geometry.geometry.lorentzian import is_lorentzian_distribution
from ergm_geometry.geometry.oracles import (
    check_sr_necessary,
    lorentzian_verdict_cubic,
    sr_cubic_beta2,
    sr_verdict_cubic,
)
from ergm_geometry.geometry.stability import falsify_stability, wagner_gap_exact
from ergm_geometry.geometry.verdicts import (
    ConditionStatus,
    CubicOutcome,
    LorentzOutcome,
    StabilityOutcome,
)
from ergm_geometry.graphs.graph import Graph
from ergm_geometry.models.markov import markov_distribution
from ergm_geometry.models.markov_params import MarkovParams
from ergm_geometry.polynomials.multiaffine import generating_polynomial


def test_sr_cubic_beta2_values():
    assert sr_cubic_beta2(1.0, 0.0) == 0.0
    # closed form evaluates to -2.09849; published value -2.098421 agrees to 1e-4
    assert sr_cubic_beta2(1.0, -1.0) == pytest.approx(-2.098421, abs=1e-3)
    assert sr_cubic_beta2(1.0, -1.0) == pytest.approx(
        4.5 * math.log(3 * math.exp(-2 / 9) - 2) + 2, rel=1e-15
    )


def test_sr_cubic_beta2_domain():
    with pytest.raises(DomainError, match="outside the domain"):
        sr_cubic_beta2(1.0, 4.5 * math.log(2 / 3))
    with pytest.raises(DomainError):
        sr_cubic_beta2(1.0, -10.0)
    with pytest.raises(ConfigurationError):
        sr_cubic_beta2(0.0, 0.0)


@pytest.mark.parametrize("beta1", [-10.0, 0.0, 10.0])
def test_edge_triangle_verdict(beta1):
    """Edge-triangle model: SR iff beta = 0, whatever beta_1"""
    sr = sr_verdict_cubic(MarkovParams.edge_triangle_model(beta1, 0.0))
    assert sr.outcome == CubicOutcome.SR
    assert sr.reason.startswith("closed-form")
    off = sr_verdict_cubic(MarkovParams.edge_triangle_model(beta1, 0.5))
    assert off.outcome == CubicOutcome.NOT_SR


def test_cubic_verdicts(cubic):
    required = sr_cubic_beta2(1.0, -1.0)
    verdict = sr_verdict_cubic(cubic(beta2=required, beta=-1.0))
    assert verdict.outcome == CubicOutcome.SR
    assert verdict.beta2_required == pytest.approx(required)
    assert sr_verdict_cubic(cubic(beta2=0.0, beta=-1.0)).outcome == CubicOutcome.NOT_SR
    assert sr_verdict_cubic(cubic(beta2=0.0, beta=0.5)).outcome == CubicOutcome.NOT_SR
    assert sr_verdict_cubic(cubic(beta2=0.0, beta=-5.0)).outcome == CubicOutcome.UNDETERMINED


@pytest.mark.parametrize("beta1", [-10.0, 0.0, 10.0])
@pytest.mark.parametrize("beta2, beta", [(0.0, 0.0), (-1.0, -1.0), (0.3, -0.2)])
def test_verdict_independent_of_edge_coefficient(cubic, beta1, beta2, beta):
    base = sr_verdict_cubic(cubic(beta2=beta2, beta=beta))
    assert sr_verdict_cubic(cubic(beta2=beta2, beta=beta, beta1=beta1)).outcome == base.outcome


def test_closed_form_preconditions(cubic, k4):
    with pytest.raises(GraphError, match="host K3"):
        sr_verdict_cubic(cubic(beta2=0.0, beta=0.0), k4)
    with pytest.raises(ConfigurationError, match="K <= 2"):
        sr_verdict_cubic(MarkovParams(beta_stars=(0.0, 0.0, 0.0)))
    with pytest.raises(ConfigurationError, match="star bound"):
        sr_verdict_cubic(MarkovParams(beta_stars=(0.0, 0.0), star_bound="cap"))


def test_lorentzian_verdict_cubic(cubic):
    edge_triangle = MarkovParams.edge_triangle_model
    assert lorentzian_verdict_cubic(edge_triangle(0.0, 0.0)) == LorentzOutcome.LORENTZIAN
    assert lorentzian_verdict_cubic(edge_triangle(0.0, 0.1)) == LorentzOutcome.NOT_LORENTZIAN
    assert lorentzian_verdict_cubic(cubic(beta2=0.5, beta=-1.0)) == LorentzOutcome.NOT_LORENTZIAN
    warm = cubic(beta2=0.0, beta=0.0, beta1=3.0, T=2.0)
    assert lorentzian_verdict_cubic(warm) == LorentzOutcome.LORENTZIAN


def test_necessary_conditions_zero_params(k4):
    report = check_sr_necessary(MarkovParams.zeros(3), k4)
    assert report.triangle_two_star.status == ConditionStatus.PASS
    assert report.three_star.status == ConditionStatus.PASS
    assert not report.refutes_sr


def test_necessary_conditions_medici_numbers():
    """Published Medici estimates fail both conditions on a 16-vertex host"""
    host = Graph.complete(16)
    params = MarkovParams(beta_triangle=1.3126, beta_stars=(0.0, 1.0611, -0.6339))
    report = check_sr_necessary(params, host)
    assert report.triangle_two_star.status == ConditionStatus.FAIL
    assert report.triangle_two_star.rhs == pytest.approx(-1.0611)
    assert report.three_star.status == ConditionStatus.FAIL
    assert report.three_star.rhs == pytest.approx(-3.39552)
    assert report.refutes_sr


def test_necessary_conditions_not_applicable(path3, k3):
    report = check_sr_necessary(MarkovParams.zeros(2), path3)
    assert report.triangle_two_star.status == ConditionStatus.NOT_APPLICABLE
    assert report.three_star.status == ConditionStatus.NOT_APPLICABLE
    assert "no 3-star" in report.three_star.detail
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    low_k = check_sr_necessary(MarkovParams.zeros(2), star)
    assert low_k.three_star.status == ConditionStatus.NOT_APPLICABLE
    assert "K=2" in low_k.three_star.detail


def test_necessary_report_to_dict(k3):
    data = check_sr_necessary(MarkovParams(beta_triangle=1.0, beta_stars=(0.0, 0.0)), k3).to_dict()
    assert data["triangle_two_star"]["status"] == "fail"
    assert data["three_star"]["status"] == "not_applicable"
    assert data["refutes_sr"] is True


@pytest.mark.slow
@pytest.mark.parametrize("beta", [-1.5, -1.0, -0.5, 0.0])
def test_formula_points_pass_nlc_and_search(k3, cubic, beta):
    """At the closed-form beta_2 the model passes NLC, the search finds
    nothing, and the distribution is Lorentzian"""
    dist = markov_distribution(k3, cubic(beta2=sr_cubic_beta2(1.0, beta), beta=beta))
    assert negative_lattice_check(dist).passed
    verdict = falsify_stability(generating_polynomial(dist), budget=20_000, seed=0)
    assert not verdict.is_violation
    assert is_lorentzian_distribution(dist).is_lorentzian


@pytest.mark.parametrize("delta", [-0.1, 0.1])
def test_perturbed_beta2_is_refuted(k3, cubic, delta):
    """Moving beta_2 off zero at beta = 0 breaks stability"""
    dist = markov_distribution(k3, cubic(beta2=delta, beta=0.0))
    nlc = negative_lattice_check(dist)
    verdict = falsify_stability(generating_polynomial(dist), budget=20_000, seed=0)
    assert verdict.is_violation or not nlc.passed


@pytest.mark.parametrize(
    "n, beta, beta_stars",
    [
        (16, 1.3126, (0.0, 1.0611, -0.6339)),
        (18, 0.35, (0.0, -0.05)),
        (36, 0.48, (0.0, -0.02)),
        (14, 3.19, (0.0, -0.29)),
    ],
    ids=["medici_business", "sampson", "lazega_work", "bank_wiring"],
)
def test_published_estimates_not_sr(n, beta, beta_stars):
    """Published estimates for the bundled networks violate beta <= -beta_2"""
    params = MarkovParams(beta_triangle=beta, beta_stars=beta_stars)
    report = check_sr_necessary(params, Graph.complete(n))
    assert report.triangle_two_star.status == ConditionStatus.FAIL
    assert report.refutes_sr


@settings(max_examples=40, deadline=None)
@given(
    beta=st.floats(-1.5, -0.05) | st.just(0.0),
    beta1=st.floats(-3.0, 3.0),
)
def test_closed_form_sr_models_are_lorentzian(beta, beta1):
    """Strongly Rayleigh cubic models on K3 are Lorentzian"""
    k3 = Graph.complete(3)
    params = MarkovParams(beta_triangle=beta, beta_stars=(beta1, sr_cubic_beta2(1.0, beta)))
    assert sr_verdict_cubic(params, k3).outcome == CubicOutcome.SR
    assert is_lorentzian_distribution(markov_distribution(k3, params)).is_lorentzian


GRID = [-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0]


@settings(max_examples=60, deadline=None)
@given(
    beta1=st.sampled_from(GRID),
    beta2=st.sampled_from(GRID),
    beta=st.sampled_from(GRID),
)
def test_not_lorentzian_models_fail_nlc(beta1, beta2, beta):
    """Every non-Lorentzian cubic model on K3 is refuted as strongly Rayleigh"""
    k3 = Graph.complete(3)
    params = MarkovParams(beta_triangle=beta, beta_stars=(beta1, beta2))
    if lorentzian_verdict_cubic(params, k3) == LorentzOutcome.LORENTZIAN:
        return
    assert not negative_lattice_check(markov_distribution(k3, params)).passed


def random_markov_models(count, seed):
    """(host, params) pairs alternating between K3 and K4 hosts"""
    rng = np.random.default_rng(seed)
    models = []
    for i in range(count):
        n = 3 if i % 2 == 0 else 4
        K = 2 if n == 3 else int(rng.integers(2, 4))
        theta = rng.uniform(-3.0, 3.0, size=K + 1)
        params = MarkovParams(
            T=float(rng.uniform(0.5, 2.0)),
            beta_triangle=float(theta[-1]),
            beta_stars=tuple(float(t) for t in theta[:-1]),
        )
        models.append((Graph.complete(n), params))
    return models


@pytest.mark.slow
def test_not_lorentzian_models_have_wagner_witness():
    """Over 200 random K3/K4 models every non-Lorentzian one gets an exactly
    confirmed Wagner violation within a budget of 10^6 evaluations"""
    refuted = 0
    for host, params in random_markov_models(200, seed=2024):
        dist = markov_distribution(host, params)
        if is_lorentzian_distribution(dist).is_lorentzian:
            continue
        poly = generating_polynomial(dist)
        verdict = falsify_stability(poly, budget=1_000_000, seed=0)
        assert verdict.outcome == StabilityOutcome.VIOLATION, (host.n, params)
        witness = verdict.witness
        assert wagner_gap_exact(poly, list(witness.point), *witness.pair) < 0
        refuted += 1
    assert refuted > 0
