from ergm_geometry.datasets.sources.graph_source import GraphSource
from ergm_geometry.datasets.sources.local_file_source import LocalFileSource
from ergm_geometry.datasets.sources.http_source import HttpSource
from ergm_geometry.datasets.sources.bundled_source import BundledSource
from ergm_geometry.datasets.sources.generated_source import GeneratedSource

__all__ = [
    "GraphSource",
    "LocalFileSource",
    "HttpSource",
    "BundledSource",
    "GeneratedSource",
]
