"""
Exact Lorentzian certification of homogeneous polynomials.

A homogeneous h of degree d is Lorentzian when its coefficients are
nonnegative, its support is M-convex, and every (d-2)-fold partial
derivative is a quadratic form with at most one positive eigenvalue.
Coefficients are kept in the plain monomial basis; only the Hessian
construction depends on that choice.
"""

import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Sequence, Set, Tuple

import numpy as np
from scipy import linalg

from ergm_geometry.core.check_config import DEFAULT_MAX_EDGES
from ergm_geometry.core.errors import ConfigurationError, DomainError
from ergm_geometry.geometry.verdicts import (
    LorentzOutcome,
    LorentzVerdict,
    MConvexResult,
    NegativeCoefficient,
    NotMConvex,
    SignatureFailure,
    SpectrumRecord,
)
from ergm_geometry.models.distribution import Distribution
from ergm_geometry.models.enumeration import check_enumerable
from ergm_geometry.polynomials.homogeneous import HomogPoly, homogenize
from ergm_geometry.polynomials.multiaffine import generating_polynomial
from ergm_geometry.utils.logger import setup_logger

logger = setup_logger(__name__)

Exponent = Tuple[int, ...]

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class SupportSet:
    """Exponent vectors of the nonzero terms of a polynomial."""

    points: FrozenSet[Exponent]

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, point: object) -> bool:
        return point in self.points

    def degree(self) -> Optional[int]:
        """Common coordinate sum, None for the empty set.

        Raises:
            ConfigurationError: If the points have different sums.
        """
        sums = {sum(p) for p in self.points}
        if len(sums) > 1:
            raise ConfigurationError(f"support is not homogeneous: degrees {sorted(sums)}")
        return sums.pop() if sums else None


class Signature(NamedTuple):
    n_pos: int
    n_neg: int
    n_zero: int


def support(h: HomogPoly, tol: float = 0.0) -> SupportSet:
    return SupportSet(frozenset(e for e, c in h.terms.items() if abs(c) > tol))


def _ordered(J: SupportSet) -> List[Exponent]:
    J.degree()
    return sorted(J.points, reverse=True)


def is_m_convex(J: SupportSet) -> MConvexResult:
    """Exchange property: for α, β in J and α_i > β_i there is j with α_j < β_j
    and α - e_i + e_j in J.

    Points are scanned in descending lexicographic order for α and β and
    ascending order for i; the first failing triple is the witness.
    """
    points = _ordered(J)
    if not points:
        return MConvexResult(True)
    arr = np.array(points, dtype=np.int64)
    n = arr.shape[1]
    for alpha in points:
        # exchange[i, j]: α - e_i + e_j in J
        exchange = np.zeros((n, n), dtype=bool)
        for i in range(n):
            if alpha[i] == 0:
                continue
            for j in range(n):
                if j == i:
                    continue
                moved = list(alpha)
                moved[i] -= 1
                moved[j] += 1
                exchange[i, j] = tuple(moved) in J
        diff = arr - np.array(alpha)
        # failing[b, i]: α_i > β_i and no admissible j exists
        rescued = (diff > 0).astype(np.int64) @ exchange.T.astype(np.int64) > 0
        failing = (diff < 0) & ~rescued
        rows = np.flatnonzero(failing.any(axis=1))
        if len(rows):
            b = int(rows[0])
            i = int(np.flatnonzero(failing[b])[0])
            return MConvexResult(False, (alpha, points[b], i))
    return MConvexResult(True)


def is_m_convex_symmetric(J: SupportSet) -> MConvexResult:
    """Symmetric exchange: for α_i > β_i there is j with α_j < β_j such that
    both α - e_i + e_j and β + e_i - e_j lie in J. Equivalent to is_m_convex."""
    points = _ordered(J)
    for alpha in points:
        for beta in points:
            for i in range(len(alpha)):
                if alpha[i] <= beta[i]:
                    continue
                found = False
                for j in range(len(alpha)):
                    if alpha[j] >= beta[j]:
                        continue
                    a = list(alpha)
                    a[i] -= 1
                    a[j] += 1
                    b = list(beta)
                    b[i] += 1
                    b[j] -= 1
                    if tuple(a) in J and tuple(b) in J:
                        found = True
                        break
                if not found:
                    return MConvexResult(False, (alpha, beta, i))
    return MConvexResult(True)


def matrix_signature(
    H: np.ndarray, tol: float = DEFAULT_TOL
) -> Tuple[Signature, np.ndarray]:
    """Eigenvalue counts of a symmetric matrix; |λ| <= tol·max|λ| counts as zero."""
    H = np.asarray(H, dtype=float)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ConfigurationError(f"expected a square matrix, got shape {H.shape}")
    eigenvalues = linalg.eigh(H, eigvals_only=True)
    norm = float(np.max(np.abs(eigenvalues))) if len(eigenvalues) else 0.0
    cutoff = tol * norm
    n_pos = int(np.sum(eigenvalues > cutoff))
    n_neg = int(np.sum(eigenvalues < -cutoff))
    return Signature(n_pos, n_neg, len(eigenvalues) - n_pos - n_neg), eigenvalues


def quadratic_matrix(q: HomogPoly) -> np.ndarray:
    """Hessian of a quadratic form: H[i][i] = 2·coeff(x_i^2), H[i][j] = coeff(x_i x_j)."""
    if q.degree != 2:
        raise DomainError(f"expected a quadratic form, got degree {q.degree}")
    H = np.zeros((q.nvars, q.nvars))
    for exp, coeff in q.terms.items():
        idx = [k for k, a in enumerate(exp) for _ in range(a)]
        i, j = idx
        if i == j:
            H[i, i] += 2.0 * coeff
        else:
            H[i, j] += coeff
            H[j, i] += coeff
    return H


def quadratic_signature(q: HomogPoly, tol: float = DEFAULT_TOL) -> Signature:
    return matrix_signature(quadratic_matrix(q), tol)[0]


def _derivative_hessians(h: HomogPoly) -> Dict[Exponent, np.ndarray]:
    """Hessian of ∂^β h for every derivative multiset β with |β| = d - 2.

    Each term c x^α feeds the quadratics β = α - γ for |γ| = 2, γ <= α, with
    coefficient c · α!/γ! on x^γ. Multisets whose quadratic vanishes are absent.
    """
    n = h.nvars
    hessians: Dict[Exponent, np.ndarray] = {}
    for alpha, coeff in h.terms.items():
        for i in range(n):
            if alpha[i] == 0:
                continue
            for j in range(i, n):
                if alpha[j] < (2 if i == j else 1):
                    continue
                beta = list(alpha)
                beta[i] -= 1
                beta[j] -= 1
                gamma_factorial = 2 if i == j else 1
                factor = math.prod(math.factorial(a) for a in alpha) / gamma_factorial
                value = coeff * factor
                H = hessians.setdefault(tuple(beta), np.zeros((n, n)))
                if i == j:
                    H[i, i] += 2.0 * value
                else:
                    H[i, j] += value
                    H[j, i] += value
    return hessians


def _margin(eigenvalues: np.ndarray) -> float:
    norm = float(np.max(np.abs(eigenvalues))) if len(eigenvalues) else 0.0
    if norm == 0.0 or len(eigenvalues) < 2:
        return 1.0
    second = float(np.sort(eigenvalues)[-2])
    return -second / norm


def is_lorentzian(h: HomogPoly, tol: float = DEFAULT_TOL) -> LorentzVerdict:
    """Check coefficients, then support, then the signatures of all
    (d-2)-fold derivatives; the first failure found is the verdict."""
    for exp in sorted(h.terms):
        if h.terms[exp] < 0:
            return LorentzVerdict(
                LorentzOutcome.NOT_LORENTZIAN, NegativeCoefficient(exp, h.terms[exp])
            )
    if h.is_zero() or h.degree < 2:
        return LorentzVerdict(LorentzOutcome.LORENTZIAN)

    exchange = is_m_convex(support(h))
    if not exchange:
        alpha, beta, i = exchange.witness
        return LorentzVerdict(LorentzOutcome.NOT_LORENTZIAN, NotMConvex(alpha, beta, i))

    spectra: List[SpectrumRecord] = []
    margin = 1.0
    failure: Optional[SignatureFailure] = None
    hessians = _derivative_hessians(h)
    logger.debug(f"checking {len(hessians)} derivative quadratics of degree-{h.degree} form")
    for orders in sorted(hessians):
        signature, eigenvalues = matrix_signature(hessians[orders], tol)
        spectra.append(SpectrumRecord(orders, tuple(float(v) for v in eigenvalues)))
        margin = min(margin, _margin(eigenvalues))
        if failure is None and signature.n_pos > 1:
            failure = SignatureFailure(orders, signature.n_pos)
    outcome = LorentzOutcome.NOT_LORENTZIAN if failure else LorentzOutcome.LORENTZIAN
    return LorentzVerdict(outcome, failure, tuple(spectra), margin)


def is_lorentzian_distribution(
    dist: Distribution, tol: float = DEFAULT_TOL, max_edges: int = DEFAULT_MAX_EDGES
) -> LorentzVerdict:
    """Lorentzian verdict for the homogenized generating polynomial of dist."""
    check_enumerable(dist.host, max_edges)
    return is_lorentzian(homogenize(generating_polynomial(dist)), tol)


def support_from_points(exponents: Sequence[Sequence[int]]) -> SupportSet:
    """SupportSet from a list of exponent vectors."""
    points: Set[Exponent] = {tuple(int(a) for a in e) for e in exponents}
    return SupportSet(frozenset(points))
