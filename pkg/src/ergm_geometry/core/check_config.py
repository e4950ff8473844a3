"""
Configuration for the geometric verdict suite.
"""

from typing import Any, Dict

from ergm_geometry.core.errors import ConfigurationError

DEFAULT_MAX_EDGES = 24


class CheckConfig:
    """
    Configuration shared by the stability, lattice and Lorentzian checks.

    Args:
        seed: Seed for every random draw made by the falsifier.
        budget: Number of Wagner-gap evaluations the falsifier may spend.
        tol: Relative zero-tolerance for eigenvalues (spectral-norm scaled).
        threads: Worker threads for parallel falsifier starts.
        max_edges: Enumeration cap on the host's edge count.
        lattice_slack: Relative slack allowed in the negative lattice inequality.
        cubic_tol: Equality tolerance used by the closed-form cubic oracle.
    """

    def __init__(
        self,
        seed: int = 0,
        budget: int = 10_000,
        tol: float = 1e-9,
        threads: int = 1,
        max_edges: int = DEFAULT_MAX_EDGES,
        lattice_slack: float = 1e-12,
        cubic_tol: float = 1e-9,
    ):
        self._seed = seed
        self._budget = budget
        self._tol = tol
        self._threads = threads
        self._max_edges = max_edges
        self._lattice_slack = lattice_slack
        self._cubic_tol = cubic_tol
        self.validate()

    def validate(self) -> None:
        """Raise ConfigurationError if any field is out of range."""
        if self._budget < 0:
            raise ConfigurationError(f"budget must be >= 0, got {self._budget}")
        if self._tol < 0:
            raise ConfigurationError(f"tol must be >= 0, got {self._tol}")
        if self._threads < 1:
            raise ConfigurationError(f"threads must be >= 1, got {self._threads}")
        if self._max_edges < 0:
            raise ConfigurationError(f"max_edges must be >= 0, got {self._max_edges}")

    @property
    def seed(self) -> int:
        """Get the random seed"""
        return self._seed

    @seed.setter
    def seed(self, value: int) -> None:
        self._seed = value

    @property
    def budget(self) -> int:
        """Get the falsifier evaluation budget"""
        return self._budget

    @budget.setter
    def budget(self, value: int) -> None:
        self._budget = value
        self.validate()

    @property
    def tol(self) -> float:
        """Get the eigenvalue zero-tolerance"""
        return self._tol

    @tol.setter
    def tol(self, value: float) -> None:
        self._tol = value
        self.validate()

    @property
    def threads(self) -> int:
        """Get the worker thread count"""
        return self._threads

    @threads.setter
    def threads(self, value: int) -> None:
        self._threads = value
        self.validate()

    @property
    def max_edges(self) -> int:
        """Get the enumeration cap"""
        return self._max_edges

    @max_edges.setter
    def max_edges(self, value: int) -> None:
        self._max_edges = value
        self.validate()

    @property
    def lattice_slack(self) -> float:
        """Get the negative lattice slack"""
        return self._lattice_slack

    @property
    def cubic_tol(self) -> float:
        """Get the closed-form equality tolerance"""
        return self._cubic_tol

    @classmethod
    def default(cls) -> "CheckConfig":
        """Create a default configuration"""
        return cls()

    def to_dict(self) -> Dict[str, Any]:
        """Convert config to dictionary"""
        return {
            "seed": self._seed,
            "budget": self._budget,
            "tol": self._tol,
            "threads": self._threads,
            "max_edges": self._max_edges,
            "lattice_slack": self._lattice_slack,
            "cubic_tol": self._cubic_tol,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CheckConfig":
        """Create config from dictionary"""
        return cls(**data)
