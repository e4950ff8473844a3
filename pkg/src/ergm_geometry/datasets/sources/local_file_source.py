"""
LocalFileSource - Loads edge-list files from the local filesystem.
"""

from typing import Optional

from ergm_geometry.datasets.edgelist import load_edgelist
from ergm_geometry.datasets.sources.graph_source import GraphSource
from ergm_geometry.graphs.graph import Graph


class LocalFileSource(GraphSource):
    """Loads edge lists from the local filesystem"""

    def get_source_type(self) -> str:
        return "file"

    def load(self, path: str) -> Graph:
        """Read and parse an edge-list file.

        Raises:
            GraphSourceError: If the file cannot be read.
            GraphFormatError: If the contents do not parse.
        """
        return load_edgelist(path)

    def can_handle(self, locator: Optional[str]) -> bool:
        """Any non-empty locator without a scheme (no ':' prefix) is a path.

        A single-letter prefix is treated as a Windows drive, not a scheme.
        """
        if not locator:
            return False
        if "://" in locator:
            return False
        scheme, sep, _ = locator.partition(":")
        return not sep or len(scheme) == 1
