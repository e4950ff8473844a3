"""
Result of a stochastic-approximation fit and its CSV trajectory.
"""

import csv
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, TextIO, Tuple

from ergm_geometry.inference.suff_stats import SuffStats
from ergm_geometry.models.markov_params import MarkovParams


def theta_names(star_cap: int) -> List[str]:
    return [f"beta_{k}" for k in range(1, star_cap + 1)] + ["beta_triangle"]


@dataclass(frozen=True)
class FitRecord:
    """One Robbins–Monro iteration: θ before the update and its moment gap."""

    iteration: int
    theta: Tuple[float, ...]
    gap: float
    boundary_fraction: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "iteration": self.iteration,
            "theta": list(self.theta),
            "gap": self.gap,
            "boundary_fraction": self.boundary_fraction,
        }


@dataclass(frozen=True)
class FitResult:
    """Fitted parameters (at T = 1), trajectory and convergence state.

    final_gap is None when no iteration ran.
    """

    params: MarkovParams
    trajectory: Tuple[FitRecord, ...]
    converged: bool
    final_gap: Optional[float]
    tol: float
    observed_stats: SuffStats
    warnings: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def iterations(self) -> int:
        return len(self.trajectory)

    @property
    def degenerate(self) -> bool:
        return any("degenerate" in w for w in self.warnings)

    def to_csv(self, stream: TextIO) -> None:
        """Write iteration, θ components and moment gap, one row per iteration."""
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["iteration", *theta_names(self.params.K), "moment_gap"])
        for record in self.trajectory:
            writer.writerow([record.iteration, *record.theta, record.gap])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "params": self.params.to_dict(),
            "converged": self.converged,
            "iterations": self.iterations,
            "final_gap": self.final_gap,
            "tol": self.tol if self.tol != float("inf") else None,
            "observed_stats": self.observed_stats.to_dict(),
            "warnings": list(self.warnings),
        }
