"""
Subgraph statistics and homomorphism counts of spanning subgraphs G_S = (V, S).

All densities are exact `Fraction`s. Python integers are unbounded, so the power
sums Σ deg(v)^k cannot overflow.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Set, Tuple

from ergm_geometry.core.errors import GraphError
from ergm_geometry.core.star_bound import StarBound
from ergm_geometry.graphs.edge_subset import EdgeSubset
from ergm_geometry.graphs.graph import Graph
from ergm_geometry.graphs.motif import Motif, MotifKind


@dataclass(frozen=True)
class SubgraphStats:
    """Degree sequence, triangle count and edge count of a spanning subgraph."""

    degrees: Tuple[int, ...]
    triangles: int
    m_s: int

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)


def _adjacency(g: Graph, s: EdgeSubset) -> List[Set[int]]:
    adjacency: List[Set[int]] = [set() for _ in range(g.n)]
    for i in s.indices():
        u, v = g.edges[i]
        adjacency[u].add(v)
        adjacency[v].add(u)
    return adjacency


def spanning_stats(g: Graph, s: EdgeSubset) -> SubgraphStats:
    """Compute degrees and the triangle count of the spanning subgraph (V, S)."""
    s.check_for(g.m)
    adjacency = _adjacency(g, s)
    triangles = 0
    for i in s.indices():
        u, v = g.edges[i]
        # each triangle is seen once per edge
        triangles += len(adjacency[u] & adjacency[v])
    return SubgraphStats(
        degrees=tuple(len(a) for a in adjacency),
        triangles=triangles // 3,
        m_s=s.size,
    )


def hom_count_kstar(stats: SubgraphStats, k: int) -> int:
    """|Hom(S_k, G_S)| = Σ_v deg(v)^k."""
    if k < 1:
        raise GraphError(f"k-star order must be >= 1, got {k}")
    return sum(d**k for d in stats.degrees)


def hom_count_triangle(stats: SubgraphStats) -> int:
    """|Hom(triangle, G_S)| = 6 × (number of triangles)."""
    return 6 * stats.triangles


def hom_count(stats: SubgraphStats, motif: Motif) -> int:
    if motif.kind == MotifKind.TRIANGLE:
        return hom_count_triangle(stats)
    return hom_count_kstar(stats, motif.k)


def density_from_stats(stats: SubgraphStats, motif: Motif) -> Fraction:
    return Fraction(hom_count(stats, motif), stats.n**motif.vertex_count)


def hom_density(g: Graph, s: EdgeSubset, motif: Motif) -> Fraction:
    """t(H, G_S) = |Hom(H, G_S)| / n^|V(H)|."""
    return density_from_stats(spanning_stats(g, s), motif)


def density_vector(stats: SubgraphStats, star_cap: int) -> Tuple[Fraction, ...]:
    """(t(S_1), ..., t(S_K), t(triangle)) of a spanning subgraph."""
    stars = tuple(
        density_from_stats(stats, Motif.kstar(k)) for k in range(1, star_cap + 1)
    )
    return stars + (density_from_stats(stats, Motif.triangle()),)


def effective_stats(
    stats: SubgraphStats,
    star_cap: int,
    star_bound: StarBound = StarBound.SUBGRAPH_MAX_DEGREE,
) -> Tuple[Fraction, ...]:
    """The statistics that actually enter the Gibbs exponent.

    Under StarBound.SUBGRAPH_MAX_DEGREE the k-star entry is zero whenever
    k > maxdeg(G_S); under StarBound.CAP this equals density_vector.
    """
    vector = list(density_vector(stats, star_cap))
    if star_bound == StarBound.SUBGRAPH_MAX_DEGREE:
        top = stats.max_degree
        for k in range(top + 1, star_cap + 1):
            vector[k - 1] = Fraction(0)
    return tuple(vector)


def edge_toggle_delta(
    g: Graph, s: EdgeSubset, e: int, star_cap: int
) -> Tuple[Fraction, ...]:
    """Change in (t(S_1), ..., t(S_K), t(triangle)) from toggling edge e.

    If e is absent from s the delta is for adding it; if present, for removing it
    (the negated delta of adding e to s minus e).
    """
    g.check_edge_index(e)
    if star_cap < 1:
        raise GraphError(f"star order cap must be >= 1, got {star_cap}")
    present = s.contains(e)
    base = s.without_edge(e)
    adjacency = _adjacency(g, base)
    u, v = g.edges[e]
    du, dv = len(adjacency[u]), len(adjacency[v])
    n = g.n
    delta = [
        Fraction((du + 1) ** k - du**k + (dv + 1) ** k - dv**k, n ** (k + 1))
        for k in range(1, star_cap + 1)
    ]
    common = len(adjacency[u] & adjacency[v])
    delta.append(Fraction(6 * common, n**3))
    sign = -1 if present else 1
    return tuple(sign * d for d in delta)
