"""
Lorentzian verdicts over a (β_2, β) parameter grid.
"""

from dataclasses import dataclass, replace
from typing import Any, Dict, List, Optional, Sequence

from ergm_geometry.core.check_config import DEFAULT_MAX_EDGES
from ergm_geometry.core.errors import ConfigurationError
from ergm_geometry.geometry.lorentzian import DEFAULT_TOL, is_lorentzian_distribution
from ergm_geometry.geometry.verdicts import LorentzOutcome
from ergm_geometry.graphs.graph import Graph
from ergm_geometry.models.markov import markov_distribution
from ergm_geometry.models.markov_params import MarkovParams
from ergm_geometry.utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class ScanPoint:
    beta2: float
    beta: float
    outcome: LorentzOutcome
    margin: Optional[float]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "beta2": self.beta2,
            "beta": self.beta,
            "outcome": self.outcome.value,
            "margin": self.margin,
        }


def lorentzian_scan(
    graph: Graph,
    base_params: MarkovParams,
    beta2_values: Sequence[float],
    beta_values: Sequence[float],
    tol: float = DEFAULT_TOL,
    max_edges: int = DEFAULT_MAX_EDGES,
) -> List[ScanPoint]:
    """Run is_lorentzian_distribution at every (β_2, β), row-major in β_2.

    Every other parameter is taken from base_params, which needs a 2-star term.
    """
    if base_params.edge_triangle or base_params.K < 2:
        raise ConfigurationError("a (β_2, β) scan needs a model with a 2-star term (K >= 2)")
    points: List[ScanPoint] = []
    for beta2 in beta2_values:
        for beta in beta_values:
            stars = (base_params.beta_stars[0], float(beta2)) + base_params.beta_stars[2:]
            params = replace(base_params, beta_stars=stars, beta_triangle=float(beta))
            verdict = is_lorentzian_distribution(
                markov_distribution(graph, params, max_edges), tol, max_edges
            )
            points.append(ScanPoint(float(beta2), float(beta), verdict.outcome, verdict.margin))
    logger.info(f"scanned {len(points)} parameter points on n={graph.n}, m={graph.m}")
    return points
