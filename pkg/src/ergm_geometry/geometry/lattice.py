"""
The negative lattice condition P(S ∪ T) P(S ∩ T) <= P(S) P(T), a necessary
condition for strong Rayleigh-ness.
"""

import math

import numpy as np

from ergm_geometry.core.check_config import DEFAULT_MAX_EDGES
from ergm_geometry.geometry.verdicts import LatticeResult
from ergm_geometry.models.distribution import Distribution
from ergm_geometry.models.enumeration import check_enumerable
from ergm_geometry.utils.logger import setup_logger

logger = setup_logger(__name__)


def negative_lattice_check(
    dist: Distribution, slack: float = 1e-12, max_edges: int = DEFAULT_MAX_EDGES
) -> LatticeResult:
    """Check every pair S < T of subset masks in log space.

    The inequality is scale invariant, so unnormalized log weights are used
    directly. The first failing pair in (S, T) lexicographic order is returned.
    """
    check_enumerable(dist.host, max_edges)
    lw = dist.log_weights
    masks = np.arange(len(lw))
    allowance = math.log1p(slack)
    worst = -np.inf
    checked = 0
    for s in range(len(lw)):
        others = masks[s + 1 :]
        if not len(others):
            break
        lhs = lw[s | others] + lw[s & others]
        rhs = lw[s] + lw[others]
        checked += len(others)
        finite = np.isfinite(lhs) & np.isfinite(rhs)
        if finite.any():
            worst = max(worst, float(np.max(lhs[finite] - rhs[finite])))
        failing = np.flatnonzero(lhs > rhs + allowance)
        if len(failing):
            t = int(others[failing[0]])
            logger.info(f"negative lattice condition fails at S={s}, T={t}")
            return LatticeResult(False, (s, t), checked, worst)
    return LatticeResult(True, None, checked, worst)
