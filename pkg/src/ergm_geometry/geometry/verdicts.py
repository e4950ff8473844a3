"""
Verdict types returned by the stability, lattice and Lorentzian checks.

Every verdict knows how to render itself into the report JSON via to_dict().
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

import numpy as np

Exponent = Tuple[int, ...]


class StabilityOutcome(str, Enum):
    VIOLATION = "violation"
    NO_VIOLATION_FOUND = "no_violation_found"
    CERTIFIED_STABLE = "certified_stable"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class WagnerWitness:
    """A point x and index pair (i, j) where the Wagner gap is negative."""

    point: Tuple[float, ...]
    pair: Tuple[int, int]
    gap: float
    start: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "point": list(self.point),
            "pair": list(self.pair),
            "gap": self.gap,
            "start": self.start,
        }


@dataclass(frozen=True)
class StabilityVerdict:
    """Three-tier answer about real stability.

    CERTIFIED_STABLE only ever comes from an exact certificate; search can at
    best report NO_VIOLATION_FOUND.
    """

    outcome: StabilityOutcome
    witness: Optional[WagnerWitness] = None
    evaluations: int = 0
    certificate: Optional[str] = None

    def __post_init__(self) -> None:
        if self.outcome == StabilityOutcome.VIOLATION and self.witness is None:
            raise ValueError("a violation verdict needs a witness")

    @property
    def is_violation(self) -> bool:
        return self.outcome == StabilityOutcome.VIOLATION

    def to_dict(self) -> Dict[str, Any]:
        return {
            "outcome": self.outcome.value,
            "witness": self.witness.to_dict() if self.witness else None,
            "evaluations": self.evaluations,
            "certificate": self.certificate,
        }


@dataclass(frozen=True)
class LatticeResult:
    """Outcome of the negative lattice check; witness is a pair of subset masks.

    worst_log_ratio is the largest log(P(S∪T)P(S∩T) / (P(S)P(T))) seen.
    """

    passed: bool
    witness: Optional[Tuple[int, int]] = None
    pairs_checked: int = 0
    worst_log_ratio: float = float("-inf")

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> Dict[str, Any]:
        worst = self.worst_log_ratio
        return {
            "passed": self.passed,
            "witness": list(self.witness) if self.witness else None,
            "pairs_checked": self.pairs_checked,
            "worst_log_ratio": float(worst) if np.isfinite(worst) else None,
        }


class CubicOutcome(str, Enum):
    SR = "sr"
    NOT_SR = "not_sr"
    UNDETERMINED = "undetermined"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CubicVerdict:
    """Closed-form strongly Rayleigh verdict for a K3 model."""

    outcome: CubicOutcome
    reason: str
    beta2_required: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "outcome": self.outcome.value,
            "reason": self.reason,
            "beta2_required": self.beta2_required,
        }


class ConditionStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not_applicable"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ConditionResult:
    """One necessary condition of the form lhs <= rhs."""

    status: ConditionStatus
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class NecessaryReport:
    """Necessary conditions for strong Rayleigh-ness; any failure refutes it."""

    triangle_two_star: ConditionResult
    three_star: ConditionResult

    @property
    def refutes_sr(self) -> bool:
        return ConditionStatus.FAIL in (self.triangle_two_star.status, self.three_star.status)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "triangle_two_star": self.triangle_two_star.to_dict(),
            "three_star": self.three_star.to_dict(),
            "refutes_sr": self.refutes_sr,
        }


@dataclass(frozen=True)
class MConvexResult:
    """Exchange-property check; witness is (α, β, i) with 0-based i."""

    is_m_convex: bool
    witness: Optional[Tuple[Exponent, Exponent, int]] = None

    def __bool__(self) -> bool:
        return self.is_m_convex


class LorentzOutcome(str, Enum):
    LORENTZIAN = "lorentzian"
    NOT_LORENTZIAN = "not_lorentzian"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class NegativeCoefficient:
    term: Exponent
    coeff: float

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "negative_coefficient", "term": list(self.term), "coeff": self.coeff}


@dataclass(frozen=True)
class NotMConvex:
    alpha: Exponent
    beta: Exponent
    index: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "not_m_convex",
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "index": self.index,
        }


@dataclass(frozen=True)
class SignatureFailure:
    """The quadratic ∂^orders h has more than one positive eigenvalue."""

    orders: Exponent
    n_pos: int

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "signature", "orders": list(self.orders), "n_pos": self.n_pos}


@dataclass(frozen=True)
class SpectrumRecord:
    orders: Exponent
    eigenvalues: Tuple[float, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {"orders": list(self.orders), "eigenvalues": list(self.eigenvalues)}


@dataclass(frozen=True)
class LorentzVerdict:
    """Lorentzian verdict with at most one failure cause.

    margin is the smallest relative gap to the one-positive-eigenvalue
    boundary over all retained spectra (second-largest eigenvalue over the
    spectral norm, negated); values near 0 are knife-edge verdicts.
    """

    outcome: LorentzOutcome
    failure: Optional[Any] = None
    spectra: Tuple[SpectrumRecord, ...] = field(default_factory=tuple)
    margin: Optional[float] = None

    @property
    def is_lorentzian(self) -> bool:
        return self.outcome == LorentzOutcome.LORENTZIAN

    def to_dict(self, include_spectra: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "outcome": self.outcome.value,
            "failure": self.failure.to_dict() if self.failure else None,
            "margin": self.margin,
        }
        if include_spectra:
            data["spectra"] = [s.to_dict() for s in self.spectra]
        return data
