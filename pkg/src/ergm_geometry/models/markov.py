"""
The Markov random graph on a host G:

    P(S) ∝ exp((1/T) · (β t(triangle, G_S) + Σ_{k=1}^{bound} β_k t(S_k, G_S)))

where bound = min(K, maxdeg(G_S)) by default (StarBound.CAP sums to K).
"""

from fractions import Fraction

import numpy as np
from scipy.special import logsumexp

from ergm_geometry.core.check_config import DEFAULT_MAX_EDGES
from ergm_geometry.graphs.edge_subset import EdgeSubset
from ergm_geometry.graphs.graph import Graph
from ergm_geometry.graphs.statistics import effective_stats, spanning_stats
from ergm_geometry.models.distribution import Distribution
from ergm_geometry.models.enumeration import (
    announce_enumeration,
    block_effective_stats,
    check_enumerable,
    iter_subset_blocks,
)
from ergm_geometry.models.markov_params import MarkovParams


def energy_exponent_exact(g: Graph, s: EdgeSubset, p: MarkovParams) -> Fraction:
    """The Gibbs exponent of subset s as an exact rational.

    Float parameters are converted with Fraction(x), which is exact.
    """
    stats = effective_stats(spanning_stats(g, s), p.K, p.star_bound)
    coefficients = [Fraction(b) for b in p.beta_stars] + [Fraction(p.beta_triangle)]
    total = sum((c * t for c, t in zip(coefficients, stats)), Fraction(0))
    return total / Fraction(p.T)


def energy_exponent(g: Graph, s: EdgeSubset, p: MarkovParams) -> float:
    """The Gibbs exponent of subset s, evaluated exactly and then rounded to float."""
    return float(energy_exponent_exact(g, s, p))


def theta_vector(p: MarkovParams) -> np.ndarray:
    return np.asarray(p.theta, dtype=float)


def markov_distribution(
    g: Graph, p: MarkovParams, max_edges: int = DEFAULT_MAX_EDGES
) -> Distribution:
    """Enumerate weight(S) = exp(energy_exponent(S)) for every subset of g.

    Raises:
        EnumerationLimitError: If g has more than max_edges edges.
        ConfigurationError: If K exceeds the host's maximum degree.
    """
    check_enumerable(g, max_edges)
    p.validate_for(g)
    announce_enumeration(g.m)
    theta = theta_vector(p)
    log_weights = np.empty(1 << g.m, dtype=float)
    for block in iter_subset_blocks(g, p.K):
        stats = block_effective_stats(block, g.n, p.star_bound)
        log_weights[block.start : block.start + len(block)] = stats @ theta
    kind = "edge_triangle" if p.edge_triangle else "markov"
    return Distribution(g, log_weights, float(logsumexp(log_weights)), kind)
