"""
Unnormalized distributions over the 2^m edge subsets of a host graph.
"""

import math
from typing import Optional, Union

import numpy as np
from scipy.special import logsumexp

from ergm_geometry.core.errors import ConfigurationError, GraphError
from ergm_geometry.graphs.edge_subset import EdgeSubset
from ergm_geometry.graphs.graph import Graph

SubsetLike = Union[EdgeSubset, int]


def _mask(subset: SubsetLike) -> int:
    return subset.mask if isinstance(subset, EdgeSubset) else int(subset)


class Distribution:
    """Weights over all edge subsets, indexed by subset mask, plus log Z.

    Weights are stored as logarithms so that large |β|/T does not overflow;
    `weights` exponentiates on demand. Geometric tests are invariant under
    positive scaling, so nothing here forces normalization.

    Attributes:
        host: The host graph.
        log_weights: log weight(S) for every mask 0..2^m - 1 (-inf for zero weight).
        log_z: log Σ_S weight(S).
        kind: Short tag of the model that produced the weights.
    """

    def __init__(
        self,
        host: Graph,
        log_weights: np.ndarray,
        log_z: Optional[float] = None,
        kind: str = "custom",
    ):
        log_weights = np.asarray(log_weights, dtype=float)
        if log_weights.shape != (1 << host.m,):
            raise ConfigurationError(
                f"expected {1 << host.m} subset weights for m={host.m}, "
                f"got shape {log_weights.shape}"
            )
        self._host = host
        self._log_weights = log_weights
        self._log_z = float(logsumexp(log_weights)) if log_z is None else float(log_z)
        self._kind = kind

    @property
    def host(self) -> Graph:
        return self._host

    @property
    def m(self) -> int:
        return self._host.m

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def log_weights(self) -> np.ndarray:
        return self._log_weights

    @property
    def log_z(self) -> float:
        return self._log_z

    @property
    def weights(self) -> np.ndarray:
        return np.exp(self._log_weights)

    @property
    def is_positive(self) -> bool:
        """True when every subset has positive weight."""
        return bool(np.all(np.isfinite(self._log_weights)))

    def probabilities(self) -> np.ndarray:
        return np.exp(self._log_weights - self._log_z)

    def probability(self, subset: SubsetLike) -> float:
        mask = _mask(subset)
        if not 0 <= mask < len(self._log_weights):
            raise GraphError(f"subset mask {mask} not valid for m={self.m}")
        return math.exp(self._log_weights[mask] - self._log_z)

    def marginal(self, e: int) -> float:
        """P(e in S)."""
        self._host.check_edge_index(e)
        masks = np.arange(len(self._log_weights))
        members = ((masks >> e) & 1).astype(bool)
        return float(np.exp(logsumexp(self._log_weights[members]) - self._log_z))

    def scaled(self, c: float) -> "Distribution":
        """Multiply every weight by c > 0; log Z shifts by ln c, probabilities do not change."""
        if not c > 0:
            raise ConfigurationError(f"scale factor must be > 0, got {c}")
        shift = math.log(c)
        return Distribution(
            self._host, self._log_weights + shift, self._log_z + shift, self._kind
        )

    def normalized(self) -> "Distribution":
        return Distribution(
            self._host, self._log_weights - self._log_z, 0.0, self._kind
        )

    def __repr__(self) -> str:
        return f"Distribution(kind={self._kind}, m={self.m}, log_z={self._log_z:.6g})"
