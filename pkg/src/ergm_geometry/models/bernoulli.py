"""
The Bernoulli (product-measure) distribution: each edge independently with probability p_e.
"""

import numpy as np

from ergm_geometry.core.check_config import DEFAULT_MAX_EDGES
from ergm_geometry.core.errors import ConfigurationError
from ergm_geometry.graphs.graph import Graph
from ergm_geometry.models.bernoulli_params import BernoulliParams
from ergm_geometry.models.distribution import Distribution
from ergm_geometry.models.enumeration import announce_enumeration, check_enumerable
from ergm_geometry.utils.logger import setup_logger

logger = setup_logger(__name__)


def bernoulli_distribution(
    g: Graph, p: BernoulliParams, max_edges: int = DEFAULT_MAX_EDGES
) -> Distribution:
    """B(S) = Π_{e∈S} p_e Π_{e∉S} (1 - p_e); already normalized, so log Z = 0.

    p_e in {0, 1} is allowed; the resulting distribution is flagged non-positive.
    """
    if p.m != g.m:
        raise ConfigurationError(f"expected {g.m} edge probabilities, got {p.m}")
    check_enumerable(g, max_edges)
    announce_enumeration(g.m)
    if not p.is_positive:
        logger.warning("Bernoulli parameters include 0 or 1: distribution is not positive")
    probs = np.asarray(p.p, dtype=float)
    with np.errstate(divide="ignore"):
        log_in = np.log(probs)
        log_out = np.log1p(-probs)
    masks = np.arange(1 << g.m, dtype=np.int64)
    log_weights = np.zeros(1 << g.m, dtype=float)
    for e in range(g.m):
        member = ((masks >> e) & 1).astype(bool)
        log_weights += np.where(member, log_in[e], log_out[e])
    return Distribution(g, log_weights, 0.0, "bernoulli")
