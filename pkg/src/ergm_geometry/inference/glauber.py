"""
Glauber dynamics for Markov random graphs.

Each step draws a uniform edge slot e, then one uniform u, and sets e present
iff u < σ(ΔE) with ΔE = E(S + e) - E(S - e). Both implementations below consume
the generator in that order, so they produce the same trajectory per seed.
"""

from typing import List, Optional

import numpy as np
from scipy.special import expit

from ergm_geometry.core.errors import GraphError
from ergm_geometry.graphs.edge_subset import EdgeSubset
from ergm_geometry.graphs.graph import Graph
from ergm_geometry.inference.suff_stats import (
    StateCounts,
    counts_of,
    energy_gap,
    stats_from_counts,
)
from ergm_geometry.models.markov_params import MarkovParams


def presence_probability(
    g: Graph, state: EdgeSubset, e: int, p: MarkovParams
) -> float:
    """P(e present after a step at slot e) = σ(E(S + e) - E(S - e))."""
    on = counts_of(g, state.with_edge(e), p.K)
    off = counts_of(g, state.without_edge(e), p.K)
    return float(expit(energy_gap(p, g.n, on, off)))


def glauber_step(
    state: EdgeSubset, g: Graph, p: MarkovParams, rng: np.random.Generator
) -> EdgeSubset:
    if g.m == 0:
        raise GraphError("Glauber dynamics needs at least one edge slot")
    e = int(rng.integers(g.m))
    u = rng.random()
    if u < presence_probability(g, state, e, p):
        return state.with_edge(e)
    return state.without_edge(e)


class GlauberSampler:
    """Incremental Glauber chain.

    Keeps degrees, a degree histogram, power sums and the triangle count so a
    step costs O(K + deg) instead of a full recount.
    """

    def __init__(
        self,
        g: Graph,
        p: MarkovParams,
        rng: np.random.Generator,
        state: Optional[EdgeSubset] = None,
    ):
        if g.m == 0:
            raise GraphError("Glauber dynamics needs at least one edge slot")
        self._g = g
        self._p = p
        self._rng = rng
        self._present: List[bool] = [False] * g.m
        self._adjacency: List[set] = [set() for _ in range(g.n)]
        self._degrees: List[int] = [0] * g.n
        self._histogram: List[int] = [g.n] + [0] * (g.n - 1)
        self._max_degree = 0
        self._power_sums: List[int] = [0] * p.K
        self._triangles = 0
        self._edges_on = 0
        if state is not None:
            state.check_for(g.m)
            for e in state.indices():
                self._add(e)

    @property
    def state(self) -> EdgeSubset:
        return EdgeSubset.from_indices(i for i, on in enumerate(self._present) if on)

    @property
    def counts(self) -> StateCounts:
        return StateCounts(tuple(self._power_sums), self._triangles, self._max_degree)

    def is_boundary(self) -> bool:
        """True at the empty or the complete state."""
        return self._edges_on in (0, self._g.m)

    def stats(self) -> np.ndarray:
        return stats_from_counts(self.counts, self._g.n, self._p.star_bound)

    def _power_delta(self, du: int, dv: int) -> List[int]:
        return [
            (du + 1) ** k - du**k + (dv + 1) ** k - dv**k
            for k in range(1, self._p.K + 1)
        ]

    def _shift_degree(self, v: int, by: int) -> None:
        self._histogram[self._degrees[v]] -= 1
        self._degrees[v] += by
        self._histogram[self._degrees[v]] += 1
        if self._degrees[v] > self._max_degree:
            self._max_degree = self._degrees[v]
        while self._max_degree > 0 and self._histogram[self._max_degree] == 0:
            self._max_degree -= 1

    def _add(self, e: int) -> None:
        u, v = self._g.edges[e]
        delta = self._power_delta(self._degrees[u], self._degrees[v])
        self._power_sums = [a + b for a, b in zip(self._power_sums, delta)]
        self._triangles += len(self._adjacency[u] & self._adjacency[v])
        self._adjacency[u].add(v)
        self._adjacency[v].add(u)
        self._shift_degree(u, 1)
        self._shift_degree(v, 1)
        self._present[e] = True
        self._edges_on += 1

    def _remove(self, e: int) -> None:
        u, v = self._g.edges[e]
        self._adjacency[u].discard(v)
        self._adjacency[v].discard(u)
        self._shift_degree(u, -1)
        self._shift_degree(v, -1)
        delta = self._power_delta(self._degrees[u], self._degrees[v])
        self._power_sums = [a - b for a, b in zip(self._power_sums, delta)]
        self._triangles -= len(self._adjacency[u] & self._adjacency[v])
        self._present[e] = False
        self._edges_on -= 1

    def step(self) -> None:
        e = int(self._rng.integers(self._g.m))
        u = self._rng.random()
        if self._present[e]:
            self._remove(e)
        off = self.counts
        a, b = self._g.edges[e]
        du, dv = self._degrees[a], self._degrees[b]
        delta = self._power_delta(du, dv)
        on = StateCounts(
            tuple(x + d for x, d in zip(off.power_sums, delta)),
            off.triangles + len(self._adjacency[a] & self._adjacency[b]),
            max(off.max_degree, du + 1, dv + 1),
        )
        if u < expit(energy_gap(self._p, self._g.n, on, off)):
            self._add(e)

    def sweep(self) -> None:
        """m single-edge steps."""
        for _ in range(self._g.m):
            self.step()
