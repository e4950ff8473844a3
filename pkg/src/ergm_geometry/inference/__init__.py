"""
Glauber sampling and stochastic-approximation fitting of Markov random graphs.
"""

from ergm_geometry.inference.chain_config import ChainConfig, GainSchedule
from ergm_geometry.inference.suff_stats import SuffStats, stat_names, state_stats
from ergm_geometry.inference.glauber import (
    GlauberSampler,
    glauber_step,
    presence_probability,
)
from ergm_geometry.inference.sampling import (
    ChainSummary,
    exact_expected_stats,
    sample_suffstats,
)
from ergm_geometry.inference.fit_result import FitRecord, FitResult, theta_names
from ergm_geometry.inference.estimation import (
    fit_stochastic_approximation,
    host_for,
    observed_suffstats,
)

__all__ = [
    "ChainConfig",
    "GainSchedule",
    "SuffStats",
    "stat_names",
    "state_stats",
    "GlauberSampler",
    "glauber_step",
    "presence_probability",
    "ChainSummary",
    "exact_expected_stats",
    "sample_suffstats",
    "FitRecord",
    "FitResult",
    "theta_names",
    "fit_stochastic_approximation",
    "host_for",
    "observed_suffstats",
]
