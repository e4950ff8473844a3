"""
Configuration classes for Markov chain sampling and stochastic approximation
"""

import math
from typing import Any, Dict, Optional

from ergm_geometry.core.errors import ConfigurationError

FIT_SWEEPS = 150
FIT_BURNIN = 50


class ChainConfig:
    """
    Configuration for a Glauber-dynamics run.
    One sweep is m single-edge steps; samples are taken every `thin` sweeps
    after `burnin` sweeps.

    Args:
        sweeps: Number of post-burnin sweeps.
        burnin: Number of discarded sweeps.
        thin: Sweeps between recorded samples.
        seed: Seed of the first chain; chain i uses seed + i.
        batches: Batch count for batch-means standard errors.
        chains: Number of independent chains.
    """

    def __init__(
        self,
        sweeps: int = 10_000,
        burnin: int = 1_000,
        thin: int = 1,
        seed: int = 0,
        batches: int = 20,
        chains: int = 1,
    ):
        self._sweeps = sweeps
        self._burnin = burnin
        self._thin = thin
        self._seed = seed
        self._batches = batches
        self._chains = chains
        self.validate()

    def validate(self) -> None:
        """Raise ConfigurationError if any field is out of range."""
        if self._sweeps < 1:
            raise ConfigurationError(f"sweeps must be positive, got {self._sweeps}")
        if self._burnin < 0:
            raise ConfigurationError(f"burnin must be >= 0, got {self._burnin}")
        if self._thin < 1:
            raise ConfigurationError(f"thin must be positive, got {self._thin}")
        if self._thin > self._sweeps:
            raise ConfigurationError(
                f"thin ({self._thin}) may not exceed sweeps ({self._sweeps})"
            )
        if self._batches < 2:
            raise ConfigurationError(f"batches must be >= 2, got {self._batches}")
        if self._chains < 1:
            raise ConfigurationError(f"chains must be positive, got {self._chains}")

    @property
    def sweeps(self) -> int:
        """Get the post-burnin sweep count"""
        return self._sweeps

    @sweeps.setter
    def sweeps(self, value: int) -> None:
        self._sweeps = value
        self.validate()

    @property
    def burnin(self) -> int:
        """Get the burn-in sweep count"""
        return self._burnin

    @burnin.setter
    def burnin(self, value: int) -> None:
        self._burnin = value
        self.validate()

    @property
    def thin(self) -> int:
        """Get the thinning interval"""
        return self._thin

    @thin.setter
    def thin(self, value: int) -> None:
        self._thin = value
        self.validate()

    @property
    def seed(self) -> int:
        """Get the base seed"""
        return self._seed

    @seed.setter
    def seed(self, value: int) -> None:
        self._seed = value

    @property
    def batches(self) -> int:
        """Get the batch-means batch count"""
        return self._batches

    @property
    def chains(self) -> int:
        """Get the number of chains"""
        return self._chains

    @property
    def samples_per_chain(self) -> int:
        return self._sweeps // self._thin

    def with_seed(self, seed: int) -> "ChainConfig":
        data = self.to_dict()
        data["seed"] = seed
        return ChainConfig.from_dict(data)

    def with_sweeps(self, sweeps: int) -> "ChainConfig":
        data = self.to_dict()
        data["sweeps"] = sweeps
        data["thin"] = min(self._thin, sweeps)
        return ChainConfig.from_dict(data)

    @classmethod
    def default(cls) -> "ChainConfig":
        """Create a default configuration"""
        return cls()

    @classmethod
    def for_fit(cls) -> "ChainConfig":
        """Short per-iteration chain for fits; GainSchedule.sweeps_at lengthens it
        as the gain shrinks."""
        return cls(sweeps=FIT_SWEEPS, burnin=FIT_BURNIN, batches=10)

    def to_dict(self) -> Dict[str, Any]:
        """Convert config to dictionary"""
        return {
            "sweeps": self._sweeps,
            "burnin": self._burnin,
            "thin": self._thin,
            "seed": self._seed,
            "batches": self._batches,
            "chains": self._chains,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ChainConfig":
        """Create config from dictionary"""
        return cls(**data)


class GainSchedule:
    """
    Robbins–Monro gain sequence a_k = a0 / (k + k0) and iteration limits.

    Args:
        a0: Gain numerator.
        k0: Gain offset.
        max_iter: Iteration cap.
        precondition: Divide each step by the statistic variances at the start.
        max_step: Per-component cap on |step|; None leaves steps unclipped.
        sweep_growth: Cap on the factor by which sweeps_at lengthens the
            per-iteration chain; 1 keeps it fixed.
    """

    def __init__(
        self,
        a0: float = 0.1,
        k0: float = 10.0,
        max_iter: int = 200,
        precondition: bool = False,
        max_step: Optional[float] = 1.0,
        sweep_growth: float = 2.0,
    ):
        self._a0 = a0
        self._k0 = k0
        self._max_iter = max_iter
        self._precondition = precondition
        self._max_step = max_step
        self._sweep_growth = sweep_growth
        self.validate()

    def validate(self) -> None:
        if not self._a0 > 0:
            raise ConfigurationError(f"a0 must be > 0, got {self._a0}")
        if not self._k0 > 0:
            raise ConfigurationError(f"k0 must be > 0, got {self._k0}")
        if self._max_iter < 0:
            raise ConfigurationError(f"max_iter must be >= 0, got {self._max_iter}")
        if self._max_step is not None and not self._max_step > 0:
            raise ConfigurationError(f"max_step must be > 0, got {self._max_step}")
        if not self._sweep_growth >= 1:
            raise ConfigurationError(f"sweep_growth must be >= 1, got {self._sweep_growth}")

    @property
    def a0(self) -> float:
        return self._a0

    @property
    def k0(self) -> float:
        return self._k0

    @property
    def max_iter(self) -> int:
        return self._max_iter

    @max_iter.setter
    def max_iter(self, value: int) -> None:
        self._max_iter = value
        self.validate()

    @property
    def precondition(self) -> bool:
        return self._precondition

    @property
    def max_step(self) -> Optional[float]:
        return self._max_step

    @property
    def sweep_growth(self) -> float:
        return self._sweep_growth

    def gain(self, k: int) -> float:
        """a_k for iteration k = 0, 1, ..."""
        return self._a0 / (k + self._k0)

    def sweeps_at(self, k: int, base: int) -> int:
        """Sweeps for iteration k: base · sqrt(a_0 / a_k), capped at base · sweep_growth."""
        factor = min(self._sweep_growth, math.sqrt(self.gain(0) / self.gain(k)))
        return int(math.ceil(base * factor))

    @classmethod
    def default(cls) -> "GainSchedule":
        return cls()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a0": self._a0,
            "k0": self._k0,
            "max_iter": self._max_iter,
            "precondition": self._precondition,
            "max_step": self._max_step,
            "sweep_growth": self._sweep_growth,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GainSchedule":
        return cls(**data)
