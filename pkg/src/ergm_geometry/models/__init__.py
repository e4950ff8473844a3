"""
Markov random graph and Bernoulli distributions over edge subsets.
"""

from ergm_geometry.models.markov_params import MarkovParams
from ergm_geometry.models.bernoulli_params import BernoulliParams
from ergm_geometry.models.distribution import Distribution
from ergm_geometry.models.markov import (
    energy_exponent,
    energy_exponent_exact,
    markov_distribution,
)
from ergm_geometry.models.bernoulli import bernoulli_distribution
from ergm_geometry.models.params_file import (
    ModelParams,
    load_params,
    parse_params,
    params_from_mapping,
)

__all__ = [
    "MarkovParams",
    "BernoulliParams",
    "Distribution",
    "energy_exponent",
    "energy_exponent_exact",
    "markov_distribution",
    "bernoulli_distribution",
    "ModelParams",
    "load_params",
    "parse_params",
    "params_from_mapping",
]
