import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ergm_geometry.core.errors import ConfigurationError, DomainError, EnumerationLimitError
from ergm_geometry.geometry.lorentzian import (
    SupportSet,
    is_lorentzian,
    is_lorentzian_distribution,
    is_m_convex,
    is_m_convex_symmetric,
    matrix_signature,
    quadratic_matrix,
    quadratic_signature,
    support,
    support_from_points,
)
from ergm_geometry.geometry.oracles import lorentzian_verdict_cubic
from ergm_geometry.geometry.verdicts import (
    LorentzOutcome,
    NegativeCoefficient,
    NotMConvex,
    SignatureFailure,
)
from ergm_geometry.models.markov import markov_distribution
from ergm_geometry.models.markov_params import MarkovParams
from ergm_geometry.polynomials.homogeneous import HomogPoly, homogenize
from ergm_geometry.polynomials.multiaffine import MultiAffinePoly

GRID = [-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0]


def test_support():
    h = HomogPoly(3, 2, {(1, 1, 0): 1.0, (0, 1, 1): 2.0})
    assert support(h).points == frozenset({(1, 1, 0), (0, 1, 1)})
    assert len(support(HomogPoly(3, 2, {}))) == 0
    assert len(support(h, tol=1.5)) == 1


def test_full_support_of_gibbs_homogenization(k3):
    dist = markov_distribution(k3, MarkovParams(beta_triangle=-1.0, beta_stars=(0.5, 0.5)))
    h = homogenize(MultiAffinePoly(3, dist.probabilities()))
    assert len(support(h)) == 8


def test_m_convex_witness():
    """{(2,0), (0,2)} misses the midpoint (1,1)"""
    result = is_m_convex(support_from_points([(2, 0), (0, 2)]))
    assert not result
    assert result.witness == ((2, 0), (0, 2), 0)
    assert is_m_convex(support_from_points([(2, 0), (1, 1), (0, 2)]))
    assert is_m_convex(SupportSet(frozenset()))


def test_m_convex_full_multiaffine_support():
    points = [(3 - sum(b),) + b for b in np.ndindex(2, 2, 2)]
    assert is_m_convex(support_from_points(points))


def test_non_homogeneous_support_rejected():
    with pytest.raises(ConfigurationError, match="not homogeneous"):
        is_m_convex(support_from_points([(1, 0), (1, 1)]))


@settings(max_examples=40, deadline=None)
@given(
    points=st.sets(
        st.tuples(st.integers(0, 3), st.integers(0, 3)).map(
            lambda p: (p[0], p[1], 3 - p[0] - p[1])
        ),
        min_size=1,
        max_size=8,
    ).map(lambda s: {p for p in s if p[2] >= 0})
)
def test_exchange_forms_agree(points):
    """The plain and symmetric exchange properties give the same answer"""
    J = support_from_points(points)
    assert bool(is_m_convex(J)) == bool(is_m_convex_symmetric(J))


def test_matrix_signatures():
    sig, eig = matrix_signature(np.array([[2.0, 4.0], [4.0, 2.0]]))
    assert tuple(sig) == (1, 1, 0)
    assert sorted(eig) == pytest.approx([-2.0, 6.0])
    sig, eig = matrix_signature(np.array([[2.0, 1.0, 1.0], [1.0, 0.0, 1.0], [1.0, 1.0, 0.0]]))
    assert tuple(sig) == (1, 1, 1)
    assert sorted(eig) == pytest.approx([-1.0, 0.0, 3.0], abs=1e-9)
    with pytest.raises(ConfigurationError):
        matrix_signature(np.zeros((2, 3)))


def test_quadratic_signature():
    """x^2 + 4xy + y^2 has one positive and one negative eigenvalue"""
    q = HomogPoly(2, 2, {(2, 0): 1.0, (1, 1): 4.0, (0, 2): 1.0})
    assert quadratic_matrix(q).tolist() == [[2.0, 4.0], [4.0, 2.0]]
    assert quadratic_signature(q) == (1, 1, 0)
    assert quadratic_signature(HomogPoly(2, 2, {(2, 0): 1.0, (0, 2): 1.0})) == (2, 0, 0)
    with pytest.raises(DomainError):
        quadratic_signature(HomogPoly(2, 1, {(1, 0): 1.0}))


def test_product_of_linear_forms_is_lorentzian():
    """(z + x1)(z + x2)(z + x3) / 8"""
    h = homogenize(MultiAffinePoly(3, [0.125] * 8))
    verdict = is_lorentzian(h)
    assert verdict.is_lorentzian
    assert verdict.failure is None
    assert len(verdict.spectra) == 4
    assert verdict.margin == pytest.approx(0.0, abs=1e-9)


def test_not_m_convex_failure():
    """(1 + x1 x2) / 2 homogenizes to a form with support {(2,0,0), (0,1,1)}"""
    verdict = is_lorentzian(homogenize(MultiAffinePoly(2, [0.5, 0.0, 0.0, 0.5])))
    assert verdict.outcome == LorentzOutcome.NOT_LORENTZIAN
    assert isinstance(verdict.failure, NotMConvex)


def test_negative_coefficient_failure():
    h = HomogPoly(2, 2, {(2, 0): 1.0, (1, 1): -1.0, (0, 2): 1.0})
    verdict = is_lorentzian(h)
    assert isinstance(verdict.failure, NegativeCoefficient)
    assert verdict.failure.term == (1, 1)


def test_signature_failure():
    verdict = is_lorentzian(HomogPoly(2, 2, {(2, 0): 1.0, (1, 1): 1.0, (0, 2): 1.0}))
    assert isinstance(verdict.failure, SignatureFailure)
    assert verdict.failure.n_pos == 2
    assert verdict.to_dict()["failure"]["kind"] == "signature"


def test_low_degree_needs_only_nonnegative_coefficients():
    assert is_lorentzian(HomogPoly(2, 1, {(1, 0): 0.3, (0, 1): 0.7})).is_lorentzian
    assert is_lorentzian(HomogPoly(2, 0, {(0, 0): 2.0})).is_lorentzian
    assert is_lorentzian(HomogPoly(3, 4, {})).is_lorentzian


def test_uniform_k3_is_lorentzian(k3):
    assert is_lorentzian_distribution(markov_distribution(k3, MarkovParams.zeros(1))).is_lorentzian


def test_bernoulli_is_lorentzian(bernoulli_instances):
    """The 20 independent-edge instances whose Wagner gap vanishes are all Lorentzian"""
    for dist in bernoulli_instances:
        assert is_lorentzian_distribution(dist).is_lorentzian


@pytest.mark.parametrize("beta", [-2.0, -1.0, -0.1, 0.0, 0.1, 1.0, 2.0])
def test_edge_triangle_grid(k3, beta):
    """Edge-triangle model on K3 is Lorentzian iff beta <= 0"""
    params = MarkovParams.edge_triangle_model(0.3, beta)
    verdict = is_lorentzian_distribution(markov_distribution(k3, params), tol=1e-9)
    assert verdict.is_lorentzian == (beta <= 0)


@pytest.mark.slow
@pytest.mark.parametrize("beta1", [-5.0, 5.0])
def test_cubic_grid_matches_closed_form(k3, cubic, beta1):
    """Cubic K3 model: Lorentzian iff beta_2 <= 0 and beta <= 0, for any beta_1"""
    for beta2 in GRID:
        for beta in GRID:
            params = cubic(beta2=beta2, beta=beta, beta1=beta1)
            verdict = is_lorentzian_distribution(markov_distribution(k3, params), tol=1e-9)
            expected = lorentzian_verdict_cubic(params) == LorentzOutcome.LORENTZIAN
            assert verdict.is_lorentzian == expected, (beta2, beta)
            assert expected == (beta2 <= 0 and beta <= 0)


def test_enumeration_cap(k4):
    with pytest.raises(EnumerationLimitError):
        is_lorentzian_distribution(markov_distribution(k4, MarkovParams.zeros(1)), max_edges=4)
