"""
Loading orchestrator for graphs. GraphLoader picks the registered GraphSource
that understands a locator (bundled dataset, generated graph, URL or path)
and delegates loading to it.
"""

from typing import Dict

from ergm_geometry.core.errors import GraphSourceError
from ergm_geometry.datasets.sources.bundled_source import BundledSource
from ergm_geometry.datasets.sources.generated_source import GeneratedSource
from ergm_geometry.datasets.sources.graph_source import GraphSource
from ergm_geometry.datasets.sources.http_source import HttpSource
from ergm_geometry.datasets.sources.local_file_source import LocalFileSource
from ergm_geometry.graphs.graph import Graph
from ergm_geometry.utils.logger import setup_logger

logger = setup_logger(__name__)


class GraphLoader:
    """Resolves locators to graphs through registered sources."""

    def __init__(self) -> None:
        """Register the built-in sources; scheme-prefixed sources come first
        so the path source only sees bare paths."""
        self.sources: Dict[str, GraphSource] = {}
        self.register_source("dataset", BundledSource())
        self.register_source("generated", GeneratedSource())
        self.register_source("http", HttpSource())
        self.register_source("file", LocalFileSource())

    @staticmethod
    def fetch(locator: str) -> Graph:
        """Create a loader and load one graph."""
        return GraphLoader().load(locator)

    def register_source(self, name: str, source: GraphSource) -> None:
        self.sources[name] = source

    def get_source(self, name: str) -> GraphSource:
        return self.sources[name]

    def get_source_for(self, locator: str) -> GraphSource:
        """
        Return the first registered source that can handle the locator.

        Raises:
            GraphSourceError: If no registered source can handle it.
        """
        for source in self.sources.values():
            if source.can_handle(locator):
                return source
        raise GraphSourceError(f"No registered graph source can handle: {locator}")

    def load(self, locator: str) -> Graph:
        source = self.get_source_for(locator)
        logger.debug(f"loading {locator} via {source.get_source_type()} source")
        return source.load(locator)
