"""
ergm_geometry Package

Markov random graph distributions, their generating polynomials, and verdicts
on negative dependence (strongly Rayleigh and Lorentzian), plus Glauber
sampling and stochastic-approximation fitting.
"""

try:
    from importlib.metadata import version

    __version__ = version("ergm_geometry")
except Exception:
    # Fallback for development/uninstalled package
    __version__ = "dev"


from ergm_geometry.core import (
    CheckConfig,
    StarBound,
    ErgmGeometryError,
    ConfigurationError,
    GraphError,
    EnumerationLimitError,
    DomainError,
)
from ergm_geometry.graphs import Graph, EdgeSubset
from ergm_geometry.models import (
    MarkovParams,
    BernoulliParams,
    Distribution,
    markov_distribution,
    bernoulli_distribution,
    load_params,
)
from ergm_geometry.polynomials import (
    MultiAffinePoly,
    HomogPoly,
    generating_polynomial,
    homogenize,
)
from ergm_geometry.geometry import (
    falsify_stability,
    negative_lattice_check,
    is_lorentzian,
    is_lorentzian_distribution,
    sr_verdict_cubic,
    check_sr_necessary,
)
from ergm_geometry.inference import (
    ChainConfig,
    GainSchedule,
    sample_suffstats,
    exact_expected_stats,
    fit_stochastic_approximation,
)
from ergm_geometry.datasets import GraphLoader, load_bundled, load_edgelist
from ergm_geometry.checks import CheckSuite, Report


__all__ = [
    "CheckConfig",
    "StarBound",
    "ErgmGeometryError",
    "ConfigurationError",
    "GraphError",
    "EnumerationLimitError",
    "DomainError",
    "Graph",
    "EdgeSubset",
    "MarkovParams",
    "BernoulliParams",
    "Distribution",
    "markov_distribution",
    "bernoulli_distribution",
    "load_params",
    "MultiAffinePoly",
    "HomogPoly",
    "generating_polynomial",
    "homogenize",
    "falsify_stability",
    "negative_lattice_check",
    "is_lorentzian",
    "is_lorentzian_distribution",
    "sr_verdict_cubic",
    "check_sr_necessary",
    "ChainConfig",
    "GainSchedule",
    "sample_suffstats",
    "exact_expected_stats",
    "fit_stochastic_approximation",
    "GraphLoader",
    "load_bundled",
    "load_edgelist",
    "CheckSuite",
    "Report",
]
