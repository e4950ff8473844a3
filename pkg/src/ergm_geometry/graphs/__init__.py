"""
Graph representation, edge subsets and homomorphism statistics.
"""

from ergm_geometry.graphs.graph import Graph, Edge
from ergm_geometry.graphs.edge_subset import EdgeSubset
from ergm_geometry.graphs.motif import Motif, MotifKind
from ergm_geometry.graphs.statistics import (
    SubgraphStats,
    spanning_stats,
    hom_count_kstar,
    hom_count_triangle,
    hom_count,
    hom_density,
    density_vector,
    effective_stats,
    edge_toggle_delta,
)

__all__ = [
    "Graph",
    "Edge",
    "EdgeSubset",
    "Motif",
    "MotifKind",
    "SubgraphStats",
    "spanning_stats",
    "hom_count_kstar",
    "hom_count_triangle",
    "hom_count",
    "hom_density",
    "density_vector",
    "effective_stats",
    "edge_toggle_delta",
]
