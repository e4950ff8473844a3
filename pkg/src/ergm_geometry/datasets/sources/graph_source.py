from abc import ABC, abstractmethod
from typing import Optional

from ergm_geometry.graphs.graph import Graph


class GraphSource(ABC):
    """
    Abstract base class for all graph sources.

    All graph source classes should inherit from this class and implement:
      - get_source_type: A short tag naming the source.
      - load: Produce the Graph for a locator.
      - can_handle: Determine if the source understands the locator.
    """

    @abstractmethod
    def get_source_type(self) -> str:
        """
        Get the type of the source.
        """
        pass

    @abstractmethod
    def load(self, locator: str) -> Graph:
        """
        Load a graph.

        Args:
            locator (str): Path, URL or scheme-prefixed identifier.

        Returns:
            Graph: The loaded graph.
        """
        pass

    @abstractmethod
    def can_handle(self, locator: Optional[str]) -> bool:
        """
        Check if this graph source can handle the given locator.

        Args:
            locator (Optional[str]): The locator, or None.

        Returns:
            bool: True if the source can load it, False otherwise.
        """
        pass
