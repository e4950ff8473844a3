"""
Loads the networks shipped with the package, addressed as dataset:<id>.
"""

from typing import Optional

from ergm_geometry.datasets.dataset_registry import DatasetRegistry
from ergm_geometry.datasets.sources.graph_source import GraphSource
from ergm_geometry.graphs.graph import Graph

PREFIX = "dataset:"


class BundledSource(GraphSource):
    def __init__(self, registry: Optional[DatasetRegistry] = None) -> None:
        self.registry = registry or DatasetRegistry()

    def get_source_type(self) -> str:
        return "dataset"

    def load(self, locator: str) -> Graph:
        dataset_id = locator[len(PREFIX) :] if locator.startswith(PREFIX) else locator
        return self.registry.load(dataset_id)

    def can_handle(self, locator: Optional[str]) -> bool:
        return locator is not None and locator.startswith(PREFIX)
