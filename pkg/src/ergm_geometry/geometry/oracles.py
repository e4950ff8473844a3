"""
Closed-form verdicts for Markov models on the triangle K3, and necessary
conditions for strong Rayleigh-ness on general hosts.
"""

import math
from typing import Optional

from ergm_geometry.core.errors import ConfigurationError, DomainError, GraphError
from ergm_geometry.core.star_bound import StarBound
from ergm_geometry.geometry.verdicts import (
    ConditionResult,
    ConditionStatus,
    CubicOutcome,
    CubicVerdict,
    LorentzOutcome,
    NecessaryReport,
)
from ergm_geometry.graphs.graph import Graph
from ergm_geometry.models.markov_params import MarkovParams

CUBIC_TOL = 1e-9


def sr_cubic_beta2(T: float, beta: float) -> float:
    """The 2-star parameter that makes the cubic K3 model strongly Rayleigh:

        β_2 = (9T/2) · ln(3 · exp(2β/(9T)) - 2) - 2β

    Raises:
        DomainError: If β <= (9T/2) · ln(2/3), where the logarithm is undefined.
    """
    if not T > 0:
        raise ConfigurationError(f"temperature T must be > 0, got {T}")
    inner = 3.0 * math.exp(2.0 * beta / (9.0 * T)) - 2.0
    if not inner > 0:
        raise DomainError(
            f"β={beta} is outside the domain β > (9T/2)·ln(2/3) = "
            f"{4.5 * T * math.log(2.0 / 3.0):.6f}"
        )
    return 4.5 * T * math.log(inner) - 2.0 * beta


def _require_cubic_host(params: MarkovParams, graph: Optional[Graph]) -> None:
    if graph is not None and not (graph.n == 3 and graph.is_complete()):
        raise GraphError(f"closed-form verdicts need the host K3, got n={graph.n}, m={graph.m}")
    if params.K > 2:
        raise ConfigurationError(f"closed-form verdicts need K <= 2, got K={params.K}")
    if params.star_bound != StarBound.SUBGRAPH_MAX_DEGREE:
        raise ConfigurationError(
            "closed-form verdicts assume the subgraph_max_degree star bound"
        )


def sr_verdict_cubic(
    params: MarkovParams, graph: Optional[Graph] = None, tol: float = CUBIC_TOL
) -> CubicVerdict:
    """Strongly Rayleigh verdict for the edge-triangle and cubic models on K3.

    Edge-triangle model: SR iff β = 0. Cubic model: SR iff β <= 0 and β_2 equals
    sr_cubic_beta2(T, β) within tol. β_1 never matters.
    """
    _require_cubic_host(params, graph)
    beta = params.beta_triangle
    if params.edge_triangle:
        if abs(beta) <= tol:
            return CubicVerdict(CubicOutcome.SR, "closed-form: edge-triangle model with β = 0")
        return CubicVerdict(CubicOutcome.NOT_SR, "closed-form: edge-triangle model needs β = 0")
    if beta > 0:
        return CubicVerdict(CubicOutcome.NOT_SR, "closed-form: cubic model needs β <= 0")
    try:
        required = sr_cubic_beta2(params.T, beta)
    except DomainError as e:
        return CubicVerdict(CubicOutcome.UNDETERMINED, f"closed-form: {e}")
    beta2 = params.beta_star(2)
    if abs(beta2 - required) <= tol:
        return CubicVerdict(
            CubicOutcome.SR, "closed-form: β_2 matches the required value", required
        )
    return CubicVerdict(
        CubicOutcome.NOT_SR,
        f"closed-form: β_2={beta2} differs from the required {required:.9g}",
        required,
    )


def lorentzian_verdict_cubic(
    params: MarkovParams, graph: Optional[Graph] = None
) -> LorentzOutcome:
    """Edge-triangle model: Lorentzian iff β <= 0. Cubic model: iff β_2 <= 0 and β <= 0."""
    _require_cubic_host(params, graph)
    holds = params.beta_triangle <= 0
    if not params.edge_triangle:
        holds = holds and params.beta_star(2) <= 0
    return LorentzOutcome.LORENTZIAN if holds else LorentzOutcome.NOT_LORENTZIAN


def check_sr_necessary(params: MarkovParams, g: Graph) -> NecessaryReport:
    """Two necessary conditions for a Markov model on g to be strongly Rayleigh.

    triangle_two_star applies when g has a triangle and requires β <= -β_2.
    three_star applies when g has a vertex of degree >= 3 and the model has a
    3-star term, and requires β_3 <= -(n/5) · β_2.
    """
    beta = params.beta_triangle
    beta2 = params.beta_star(2)
    if g.has_triangle():
        status = ConditionStatus.FAIL if beta > -beta2 else ConditionStatus.PASS
        triangle = ConditionResult(status, beta, -beta2, "β <= -β_2")
    else:
        triangle = ConditionResult(ConditionStatus.NOT_APPLICABLE, detail="host has no triangle")

    if not g.has_k_star(3):
        three = ConditionResult(ConditionStatus.NOT_APPLICABLE, detail="host has no 3-star")
    elif params.K < 3:
        three = ConditionResult(
            ConditionStatus.NOT_APPLICABLE,
            detail=f"model has no 3-star term (K={params.K})",
        )
    else:
        beta3 = params.beta_star(3)
        bound = -g.n * beta2 / 5.0
        status = ConditionStatus.FAIL if beta3 > bound else ConditionStatus.PASS
        three = ConditionResult(status, beta3, bound, "β_3 <= -(n/5)·β_2")
    return NecessaryReport(triangle, three)
