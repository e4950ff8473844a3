"""
Classic social networks bundled as edge-list files under datasets/data/.
"""

from dataclasses import dataclass
from importlib import resources
from typing import Dict, List, Optional

from ergm_geometry.core.errors import DatasetError
from ergm_geometry.datasets.edgelist import parse_edgelist
from ergm_geometry.graphs.graph import Graph
from ergm_geometry.utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class DatasetEntry:
    id: str
    description: str
    expected_n: int
    expected_m: int
    citation: str

    @property
    def filename(self) -> str:
        return f"{self.id}.edgelist"

    def to_dict(self) -> Dict[str, object]:
        return {
            "id": self.id,
            "description": self.description,
            "expected_n": self.expected_n,
            "expected_m": self.expected_m,
            "citation": self.citation,
        }


BUNDLED: List[DatasetEntry] = [
    DatasetEntry(
        "medici_business",
        "Business ties among 16 Florentine families of the 15th century",
        16,
        15,
        "Padgett & Ansell (1993), Robust action and the rise of the Medici",
    ),
    DatasetEntry(
        "sampson",
        "Symmetrized liking ties among 18 novices in a New England monastery",
        18,
        36,
        "Sampson (1968), A novitiate in a period of change",
    ),
    DatasetEntry(
        "lazega_work",
        "Coworker network of the 36 partners of a corporate law firm (stand-in edge set)",
        36,
        73,
        "Lazega (2001), The Collegial Phenomenon",
    ),
    DatasetEntry(
        "bank_wiring",
        "Game-playing ties among 14 employees of a bank wiring room",
        14,
        26,
        "Roethlisberger & Dickson (1939), Management and the Worker",
    ),
]


class DatasetRegistry:
    """Lookup of bundled datasets by id."""

    def __init__(self, entries: Optional[List[DatasetEntry]] = None):
        self._entries: Dict[str, DatasetEntry] = {e.id: e for e in (entries or BUNDLED)}

    def list_entries(self) -> List[DatasetEntry]:
        return list(self._entries.values())

    def ids(self) -> List[str]:
        return list(self._entries)

    def get(self, dataset_id: str) -> DatasetEntry:
        if dataset_id not in self._entries:
            raise DatasetError(
                f"Unknown dataset '{dataset_id}'. Available datasets: {', '.join(self.ids())}"
            )
        return self._entries[dataset_id]

    def read_text(self, dataset_id: str) -> str:
        entry = self.get(dataset_id)
        data_file = resources.files("ergm_geometry.datasets") / "data" / entry.filename
        return data_file.read_text(encoding="utf-8")

    def load(self, dataset_id: str) -> Graph:
        """Load a bundled network and check its vertex and edge counts.

        Raises:
            DatasetError: For an unknown id or a file that disagrees with its entry.
        """
        entry = self.get(dataset_id)
        graph = parse_edgelist(self.read_text(dataset_id), f"dataset:{dataset_id}").graph
        if graph.n != entry.expected_n:
            raise DatasetError(
                f"dataset '{dataset_id}' has {graph.n} vertices, expected {entry.expected_n}"
            )
        if graph.m != entry.expected_m:
            raise DatasetError(
                f"dataset '{dataset_id}' has {graph.m} edges, expected {entry.expected_m}"
            )
        logger.debug(f"loaded dataset {dataset_id}: n={graph.n}, m={graph.m}")
        return graph


def load_bundled(dataset_id: str) -> Graph:
    return DatasetRegistry().load(dataset_id)
