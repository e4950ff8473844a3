"""
Sufficient statistics (t(S_1), ..., t(S_K), t(triangle)) of a graph state.

These are the effective statistics: under the subgraph_max_degree star bound
t(S_k) is zero whenever k exceeds the state's maximum degree, which is exactly
what enters the Gibbs exponent.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, NamedTuple, Sequence, Tuple

import numpy as np

from ergm_geometry.core.star_bound import StarBound
from ergm_geometry.graphs.edge_subset import EdgeSubset
from ergm_geometry.graphs.graph import Graph
from ergm_geometry.graphs.statistics import effective_stats, spanning_stats
from ergm_geometry.models.markov_params import MarkovParams


def stat_names(star_cap: int) -> List[str]:
    return [f"t_S{k}" for k in range(1, star_cap + 1)] + ["t_triangle"]


@dataclass(frozen=True)
class SuffStats:
    """A statistics vector; the last entry is the triangle density."""

    values: Tuple[float, ...]

    @classmethod
    def from_vector(cls, vector: Sequence[float]) -> "SuffStats":
        return cls(tuple(float(v) for v in vector))

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.values, dtype=float)

    @property
    def star_cap(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, index: int) -> float:
        return self.values[index]

    def __len__(self) -> int:
        return len(self.values)

    def to_dict(self) -> Dict[str, Any]:
        return dict(zip(stat_names(self.star_cap), self.values))


def state_stats(
    g: Graph,
    s: EdgeSubset,
    star_cap: int,
    star_bound: StarBound = StarBound.SUBGRAPH_MAX_DEGREE,
) -> SuffStats:
    """Effective statistics of the spanning subgraph (V, s), rounded once to float."""
    return SuffStats.from_vector(
        [float(t) for t in effective_stats(spanning_stats(g, s), star_cap, star_bound)]
    )


class StateCounts(NamedTuple):
    """Integer counts from which the statistics of a state follow."""

    power_sums: Tuple[int, ...]
    triangles: int
    max_degree: int


def counts_of(g: Graph, s: EdgeSubset, star_cap: int) -> StateCounts:
    stats = spanning_stats(g, s)
    sums = tuple(sum(d**k for d in stats.degrees) for k in range(1, star_cap + 1))
    return StateCounts(sums, stats.triangles, stats.max_degree)


def _star_included(k: int, counts: StateCounts, star_bound: StarBound) -> bool:
    return star_bound == StarBound.CAP or k <= counts.max_degree


def energy_gap(p: MarkovParams, n: int, on: StateCounts, off: StateCounts) -> float:
    """Exponent difference E(S + e) - E(S - e) from the counts of the two states.

    Integer differences are taken before dividing so the result is
    deterministic in the counts.
    """
    total = 0.0
    for k in range(1, p.K + 1):
        w_on = on.power_sums[k - 1] if _star_included(k, on, p.star_bound) else 0
        w_off = off.power_sums[k - 1] if _star_included(k, off, p.star_bound) else 0
        total += p.beta_stars[k - 1] * ((w_on - w_off) / n ** (k + 1))
    total += p.beta_triangle * (6 * (on.triangles - off.triangles) / n**3)
    return total / p.T


def stats_from_counts(counts: StateCounts, n: int, star_bound: StarBound) -> np.ndarray:
    star_cap = len(counts.power_sums)
    vector = np.empty(star_cap + 1)
    for k in range(1, star_cap + 1):
        included = _star_included(k, counts, star_bound)
        vector[k - 1] = counts.power_sums[k - 1] / n ** (k + 1) if included else 0.0
    vector[star_cap] = 6 * counts.triangles / n**3
    return vector
