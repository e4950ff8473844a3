"""
Edge-list ingestion, bundled networks and graph sources.
"""

from ergm_geometry.datasets.edgelist import (
    ParsedEdgeList,
    load_edgelist,
    parse_edgelist,
    to_edgelist,
)
from ergm_geometry.datasets.dot import to_dot
from ergm_geometry.datasets.dataset_registry import (
    DatasetEntry,
    DatasetRegistry,
    load_bundled,
)
from ergm_geometry.datasets.graph_loader import GraphLoader

__all__ = [
    "ParsedEdgeList",
    "load_edgelist",
    "parse_edgelist",
    "to_edgelist",
    "to_dot",
    "DatasetEntry",
    "DatasetRegistry",
    "load_bundled",
    "GraphLoader",
]
