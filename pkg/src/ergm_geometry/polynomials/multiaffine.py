"""
Multiaffine polynomials g(x) = Σ_S c_S x^S, stored densely by subset mask.

Bit i of the mask marks variable x_i. Gibbs distributions are positive, so
every coefficient is nonzero and a dense array is the natural layout.
"""

from fractions import Fraction
from functools import reduce
from typing import Sequence

import numpy as np

from ergm_geometry.core.errors import GraphError
from ergm_geometry.models.distribution import Distribution


class MultiAffinePoly:
    """Dense multiaffine polynomial in m variables.

    Attributes:
        m: Number of variables.
        coeffs: coeffs[mask] is the coefficient of Π_{i in mask} x_i.
    """

    def __init__(self, m: int, coeffs: Sequence[float]):
        coeffs = np.asarray(coeffs, dtype=float)
        if coeffs.shape != (1 << m,):
            raise GraphError(f"expected {1 << m} coefficients for m={m}, got {coeffs.shape}")
        self._m = m
        self._coeffs = coeffs

    @property
    def m(self) -> int:
        return self._m

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    def coefficient(self, mask: int) -> float:
        return float(self._coeffs[mask])

    def check_index(self, i: int) -> None:
        if not 0 <= i < self._m:
            raise GraphError(f"variable index {i} out of range 0..{self._m - 1}")

    def __repr__(self) -> str:
        return f"MultiAffinePoly(m={self._m})"


def generating_polynomial(dist: Distribution, normalized: bool = True) -> MultiAffinePoly:
    """g_P(x) = Σ_S P(S) x^S; unnormalized weights when normalized is False."""
    coeffs = dist.probabilities() if normalized else dist.weights
    return MultiAffinePoly(dist.m, coeffs)


def evaluate(poly: MultiAffinePoly, x: Sequence[float]) -> float:
    """Evaluate by folding one variable at a time (Horner over the subset lattice)."""
    x = np.asarray(x, dtype=float)
    if x.shape != (poly.m,):
        raise GraphError(f"point has {x.shape[0] if x.ndim else 0} coordinates, expected {poly.m}")
    values = poly.coeffs
    for i in range(poly.m):
        values = values[0::2] + x[i] * values[1::2]
    return float(values[0])


def evaluate_exact(poly: MultiAffinePoly, x: Sequence) -> Fraction:
    """Exact rational evaluation; float coefficients and coordinates convert exactly."""
    if len(x) != poly.m:
        raise GraphError(f"point has {len(x)} coordinates, expected {poly.m}")
    values = [Fraction(float(c)) for c in poly.coeffs]
    for xi in x:
        q = Fraction(xi)
        values = [values[j] + q * values[j + 1] for j in range(0, len(values), 2)]
    return values[0]


def partial(poly: MultiAffinePoly, i: int) -> MultiAffinePoly:
    """∂g/∂x_i: coefficient of S is coeff(S ∪ {i}) when i ∉ S, else 0."""
    poly.check_index(i)
    masks = np.arange(1 << poly.m, dtype=np.int64)
    without = masks[((masks >> i) & 1) == 0]
    out = np.zeros_like(poly.coeffs)
    out[without] = poly.coeffs[without | (1 << i)]
    return MultiAffinePoly(poly.m, out)


def bilinear_slice(
    poly: MultiAffinePoly, x: Sequence[float], i: int, j: int
) -> np.ndarray:
    """The 2×2 table M with g = Σ_{a,b} M[a, b] x_i^a x_j^b at the other coordinates of x.

    Every other variable is contracted against (1, x_k).
    """
    m = poly.m
    tensor = poly.coeffs.reshape((2,) * m)
    # C-order reshape: variable k lives on axis m - 1 - k
    tensor = np.moveaxis(tensor, [m - 1 - i, m - 1 - j], [0, 1])
    rest = [k for k in range(m - 1, -1, -1) if k not in (i, j)]
    weights = reduce(
        np.kron, [np.array([1.0, x[k]]) for k in rest], np.ones(1)
    )
    return tensor.reshape(2, 2, -1) @ weights
