"""
Builds standard graphs on demand: complete:<n> is K_n.
"""

from typing import Optional

from ergm_geometry.core.errors import GraphSourceError
from ergm_geometry.datasets.sources.graph_source import GraphSource
from ergm_geometry.graphs.graph import Graph

PREFIX = "complete:"


class GeneratedSource(GraphSource):
    def get_source_type(self) -> str:
        return "generated"

    def load(self, locator: str) -> Graph:
        size = locator[len(PREFIX) :]
        if not size.isdigit() or int(size) < 1:
            raise GraphSourceError(f"expected complete:<n> with n >= 1, got {locator!r}")
        return Graph.complete(int(size))

    def can_handle(self, locator: Optional[str]) -> bool:
        return locator is not None and locator.startswith(PREFIX)
