"""
Shared inputs of a check run, with the distribution and polynomial built once.
"""

from typing import Optional, Union

from ergm_geometry.core.check_config import CheckConfig
from ergm_geometry.graphs.graph import Graph
from ergm_geometry.models.bernoulli import bernoulli_distribution
from ergm_geometry.models.bernoulli_params import BernoulliParams
from ergm_geometry.models.distribution import Distribution
from ergm_geometry.models.markov import markov_distribution
from ergm_geometry.models.markov_params import MarkovParams
from ergm_geometry.polynomials.multiaffine import MultiAffinePoly, generating_polynomial

ModelParams = Union[MarkovParams, BernoulliParams]


class CheckContext:
    def __init__(self, graph: Graph, model: ModelParams, config: CheckConfig):
        self.graph = graph
        self.model = model
        self.config = config
        self._distribution: Optional[Distribution] = None
        self._polynomial: Optional[MultiAffinePoly] = None

    @property
    def is_markov(self) -> bool:
        return isinstance(self.model, MarkovParams)

    def distribution(self) -> Distribution:
        """Enumerate the model once.

        Raises:
            EnumerationLimitError: If the host exceeds config.max_edges.
        """
        if self._distribution is None:
            if isinstance(self.model, MarkovParams):
                self._distribution = markov_distribution(
                    self.graph, self.model, self.config.max_edges
                )
            else:
                self._distribution = bernoulli_distribution(
                    self.graph, self.model, self.config.max_edges
                )
        return self._distribution

    def polynomial(self) -> MultiAffinePoly:
        if self._polynomial is None:
            self._polynomial = generating_polynomial(self.distribution())
        return self._polynomial
