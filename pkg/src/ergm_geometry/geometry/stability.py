"""
Real-stability tests for multiaffine polynomials via the Wagner criterion.

A multiaffine g is real stable iff for every pair i != j and every real x

    ∂_i g(x) · ∂_j g(x) - ∂_i ∂_j g(x) · g(x) >= 0.

Search can only refute this; positive answers come from certify_product_form
or the closed-form oracles.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ergm_geometry.core.errors import ConfigurationError
from ergm_geometry.geometry.verdicts import (
    StabilityOutcome,
    StabilityVerdict,
    WagnerWitness,
)
from ergm_geometry.polynomials.multiaffine import (
    MultiAffinePoly,
    bilinear_slice,
    evaluate_exact,
    partial,
)
from ergm_geometry.utils.logger import setup_logger

logger = setup_logger(__name__)

VIOLATION_TOL = 1e-9
DESCENT_ROUNDS = 3
INITIAL_STEP = 0.5


def _check_pair(g: MultiAffinePoly, i: int, j: int) -> None:
    g.check_index(i)
    g.check_index(j)
    if i == j:
        raise ConfigurationError(f"Wagner gap needs distinct indices, got i = j = {i}")


def _gap_and_scale(
    g: MultiAffinePoly, x: Sequence[float], i: int, j: int
) -> Tuple[float, float]:
    """Gap b·c - a·d of the bilinear slice a + b x_j + c x_i + d x_i x_j, and its scale.

    The scale is max(1, g(x)^2, |a·d| + |b·c|); the last term bounds the
    rounding error of the subtraction.
    """
    (a, b), (c, d) = bilinear_slice(g, x, i, j)
    value = a + b * x[j] + c * x[i] + d * x[i] * x[j]
    gap = b * c - a * d
    scale = max(1.0, value * value, abs(a * d) + abs(b * c))
    return float(gap), float(scale)


def wagner_gap(g: MultiAffinePoly, x: Sequence[float], i: int, j: int) -> float:
    """∂_i g(x) ∂_j g(x) - ∂_i ∂_j g(x) g(x); independent of x_i and x_j."""
    _check_pair(g, i, j)
    return _gap_and_scale(g, np.asarray(x, dtype=float), i, j)[0]


def wagner_gap_exact(g: MultiAffinePoly, x: Sequence, i: int, j: int) -> Fraction:
    """Exact rational Wagner gap for the float coefficients of g at a rational x."""
    _check_pair(g, i, j)
    gi = partial(g, i)
    gj = partial(g, j)
    gij = partial(gi, j)
    return evaluate_exact(gi, x) * evaluate_exact(gj, x) - evaluate_exact(
        gij, x
    ) * evaluate_exact(g, x)


@dataclass(frozen=True)
class _StartResult:
    start: int
    evaluations: int
    witness: Optional[WagnerWitness]


class _Falsifier:
    """Multi-start coordinate descent on min over pairs of gap/scale."""

    def __init__(self, g: MultiAffinePoly, budget: int, seed: int):
        self.g = g
        self.budget = budget
        self.seed = seed
        self.pairs: List[Tuple[int, int]] = list(combinations(range(g.m), 2))
        self.evals_per_objective = len(self.pairs)
        # one evaluation at the start point plus two per coordinate per round
        self.start_cost = self.evals_per_objective * (1 + DESCENT_ROUNDS * 2 * g.m)

    @property
    def n_starts(self) -> int:
        return -(-self.budget // self.start_cost)

    def start_point(self, s: int) -> np.ndarray:
        rng = np.random.default_rng([self.seed, s])
        m = self.g.m
        kind = s % 3
        if kind == 0:
            return rng.standard_cauchy(m)
        if kind == 1:
            return rng.normal(0.0, 0.5, m)
        point = np.zeros(m)
        point[rng.integers(m)] = rng.standard_cauchy()
        return point

    def objective(self, x: np.ndarray) -> Tuple[float, Optional[WagnerWitness]]:
        """Smallest scaled gap at x, plus a witness when it is a violation."""
        best = np.inf
        witness = None
        for i, j in self.pairs:
            gap, scale = _gap_and_scale(self.g, x, i, j)
            ratio = gap / scale
            if ratio < best:
                best = ratio
            if witness is None and gap < -VIOLATION_TOL * scale:
                if wagner_gap_exact(self.g, list(x), i, j) < 0:
                    witness = WagnerWitness(tuple(float(v) for v in x), (i, j), gap)
        return best, witness

    def run_start(self, s: int) -> _StartResult:
        allowance = min(self.start_cost, self.budget - s * self.start_cost)
        used = 0

        def affordable() -> bool:
            return used + self.evals_per_objective <= allowance

        if not affordable():
            return _StartResult(s, 0, None)
        x = self.start_point(s)
        value, witness = self.objective(x)
        used += self.evals_per_objective
        h = INITIAL_STEP
        for _ in range(DESCENT_ROUNDS):
            for k in range(self.g.m):
                for sign in (1.0, -1.0):
                    if witness is not None or not affordable():
                        return self._finish(s, used, witness)
                    candidate = x.copy()
                    candidate[k] += sign * h * (1.0 + abs(x[k]))
                    cand_value, witness = self.objective(candidate)
                    used += self.evals_per_objective
                    if witness is not None or cand_value < value:
                        x, value = candidate, cand_value
            h /= 4.0
        return self._finish(s, used, witness)

    @staticmethod
    def _finish(s: int, used: int, witness: Optional[WagnerWitness]) -> _StartResult:
        if witness is not None:
            witness = WagnerWitness(witness.point, witness.pair, witness.gap, s)
        return _StartResult(s, used, witness)


def falsify_stability(
    g: MultiAffinePoly, budget: int, seed: int = 0, threads: int = 1
) -> StabilityVerdict:
    """Search for a point where the Wagner inequality fails.

    Start points cycle through Cauchy draws, near-origin normal draws and
    points on a coordinate axis; each start runs a short coordinate descent.
    Start s owns the budget slice [s·C, (s+1)·C) so the result does not depend
    on the thread count, and the reported witness is the lowest violating start.
    """
    if budget < 0:
        raise ConfigurationError(f"budget must be >= 0, got {budget}")
    if threads < 1:
        raise ConfigurationError(f"threads must be >= 1, got {threads}")
    if g.m < 2:
        return StabilityVerdict(StabilityOutcome.CERTIFIED_STABLE, certificate="univariate")
    if budget == 0:
        return StabilityVerdict(StabilityOutcome.NO_VIOLATION_FOUND, evaluations=0)

    falsifier = _Falsifier(g, budget, seed)
    spent = 0
    with ThreadPoolExecutor(max_workers=threads) as executor:
        for first in range(0, falsifier.n_starts, threads):
            batch = range(first, min(first + threads, falsifier.n_starts))
            results = list(executor.map(falsifier.run_start, batch))
            for result in results:
                spent += result.evaluations
                if result.witness is not None:
                    logger.info(
                        f"Wagner violation at start {result.start}, pair "
                        f"{result.witness.pair}, gap {result.witness.gap:.3e}"
                    )
                    return StabilityVerdict(
                        StabilityOutcome.VIOLATION, result.witness, spent
                    )
    return StabilityVerdict(StabilityOutcome.NO_VIOLATION_FOUND, evaluations=spent)


def certify_product_form(g: MultiAffinePoly, rtol: float = 1e-9) -> StabilityVerdict:
    """Certify g = c·Π(a_e + b_e x_e) with a_e > 0, b_e >= 0 coefficients.

    With c_∅ > 0 this holds iff coeff(S)/coeff(∅) = Π_{e in S} coeff({e})/coeff(∅)
    for every S. Products of real-rooted univariate factors are real stable.
    """
    coeffs = g.coeffs
    base = coeffs[0]
    if not base > 0:
        return StabilityVerdict(StabilityOutcome.NO_VIOLATION_FOUND)
    singles = np.array([coeffs[1 << e] / base for e in range(g.m)])
    expected = np.ones(1)
    # expected[mask] for masks over the first e variables, built one variable at a time
    for e in range(g.m):
        expected = np.concatenate([expected, expected * singles[e]])
    if np.allclose(coeffs / base, expected, rtol=rtol, atol=0.0):
        return StabilityVerdict(
            StabilityOutcome.CERTIFIED_STABLE, certificate="product-form"
        )
    return StabilityVerdict(StabilityOutcome.NO_VIOLATION_FOUND)
