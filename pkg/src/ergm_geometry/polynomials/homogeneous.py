"""
Sparse homogeneous polynomials and the homogenization of multiaffine ones.

Terms map exponent vectors (little-endian in variable index) to coefficients.
Coefficients are in the plain monomial basis, not divided by α!.
"""

import math
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

import numpy as np

from ergm_geometry.core.errors import ConfigurationError, DomainError, GraphError
from ergm_geometry.polynomials.multiaffine import MultiAffinePoly

Exponent = Tuple[int, ...]


class HomogPoly:
    """Homogeneous polynomial of a fixed degree in nvars variables.

    Explicit zero coefficients are dropped on construction.
    """

    def __init__(
        self,
        nvars: int,
        degree: int,
        terms: Mapping[Sequence[int], float],
        var_names: Optional[Sequence[str]] = None,
    ):
        clean: Dict[Exponent, float] = {}
        for exp, coeff in terms.items():
            exp = tuple(int(a) for a in exp)
            if len(exp) != nvars:
                raise ConfigurationError(f"exponent {exp} does not have {nvars} entries")
            if any(a < 0 for a in exp) or sum(exp) != degree:
                raise ConfigurationError(f"exponent {exp} is not of degree {degree}")
            if coeff != 0:
                clean[exp] = clean.get(exp, 0.0) + float(coeff)
        self._nvars = nvars
        self._degree = degree
        self._terms = {e: c for e, c in clean.items() if c != 0}
        if var_names is None:
            var_names = [f"x{i}" for i in range(nvars)]
        self._var_names = tuple(var_names)

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def terms(self) -> Dict[Exponent, float]:
        return dict(self._terms)

    @property
    def var_names(self) -> Tuple[str, ...]:
        return self._var_names

    def coefficient(self, exp: Iterable[int]) -> float:
        return self._terms.get(tuple(exp), 0.0)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomogPoly):
            return NotImplemented
        return (
            self._nvars == other._nvars
            and self._degree == other._degree
            and self._terms == other._terms
        )

    def __repr__(self) -> str:
        return f"HomogPoly(nvars={self._nvars}, degree={self._degree}, terms={len(self._terms)})"


def homogenize(poly: MultiAffinePoly) -> HomogPoly:
    """h(z, x) = z^m g(x / z); variable 0 is z and x_i becomes variable i + 1."""
    m = poly.m
    terms: Dict[Exponent, float] = {}
    for mask, coeff in enumerate(poly.coeffs):
        if coeff == 0:
            continue
        bits = tuple((mask >> i) & 1 for i in range(m))
        terms[(m - sum(bits),) + bits] = float(coeff)
    names = ["z"] + [f"x{i}" for i in range(m)]
    return HomogPoly(m + 1, m, terms, names)


def dehomogenize(h: HomogPoly) -> MultiAffinePoly:
    """Set z = 1 (variable 0); every x-exponent must be 0 or 1."""
    m = h.nvars - 1
    coeffs = np.zeros(1 << m, dtype=float)
    for exp, coeff in h.terms.items():
        if any(a > 1 for a in exp[1:]):
            raise ConfigurationError(f"term {exp} is not multiaffine in x")
        mask = sum(1 << i for i, a in enumerate(exp[1:]) if a)
        coeffs[mask] += coeff
    return MultiAffinePoly(m, coeffs)


def homog_partial(h: HomogPoly, i: int) -> HomogPoly:
    """Formal ∂/∂(variable i); the degree drops by one."""
    if h.degree < 1:
        raise DomainError("cannot differentiate a degree-0 polynomial")
    if not 0 <= i < h.nvars:
        raise GraphError(f"variable index {i} out of range 0..{h.nvars - 1}")
    terms: Dict[Exponent, float] = {}
    for exp, coeff in h.terms.items():
        if exp[i] == 0:
            continue
        lowered = list(exp)
        lowered[i] -= 1
        key = tuple(lowered)
        terms[key] = terms.get(key, 0.0) + coeff * exp[i]
    return HomogPoly(h.nvars, h.degree - 1, terms, h.var_names)


def derivative_multiset(h: HomogPoly, orders: Sequence[int]) -> HomogPoly:
    """∂^β h for an exponent vector β of derivative orders."""
    if len(orders) != h.nvars:
        raise ConfigurationError(f"derivative orders need {h.nvars} entries")
    total = sum(orders)
    if total > h.degree:
        return HomogPoly(h.nvars, 0, {}, h.var_names)
    terms: Dict[Exponent, float] = {}
    for exp, coeff in h.terms.items():
        if any(a < b for a, b in zip(exp, orders)):
            continue
        factor = 1
        for a, b in zip(exp, orders):
            factor *= math.perm(a, b)
        key = tuple(a - b for a, b in zip(exp, orders))
        terms[key] = terms.get(key, 0.0) + coeff * factor
    return HomogPoly(h.nvars, h.degree - total, terms, h.var_names)


def evaluate_homog(h: HomogPoly, x: Sequence[float]) -> float:
    if len(x) != h.nvars:
        raise GraphError(f"point has {len(x)} coordinates, expected {h.nvars}")
    total = 0.0
    for exp, coeff in h.terms.items():
        term = coeff
        for xi, a in zip(x, exp):
            if a:
                term *= xi**a
        total += term
    return total
