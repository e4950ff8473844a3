"""
JSON emission of polynomials: {"vars": [...], "terms": [{"exp": [...], "coeff": c}, ...]}.

Exponents are little-endian in variable index; terms are sorted by exponent so
output is stable.
"""

import json
from typing import Any, Dict

from ergm_geometry.core.errors import ConfigurationError
from ergm_geometry.polynomials.homogeneous import HomogPoly
from ergm_geometry.polynomials.multiaffine import MultiAffinePoly


def poly_to_dict(poly: MultiAffinePoly) -> Dict[str, Any]:
    m = poly.m
    terms = []
    for mask, coeff in enumerate(poly.coeffs):
        if coeff == 0:
            continue
        terms.append(
            {"exp": [(mask >> i) & 1 for i in range(m)], "coeff": float(coeff)}
        )
    terms.sort(key=lambda t: t["exp"])
    return {"vars": [f"x{i}" for i in range(m)], "terms": terms}


def homog_to_dict(h: HomogPoly) -> Dict[str, Any]:
    terms = [
        {"exp": list(exp), "coeff": coeff} for exp, coeff in sorted(h.terms.items())
    ]
    return {"vars": list(h.var_names), "degree": h.degree, "terms": terms}


def poly_to_json(poly: MultiAffinePoly, indent: int = 2) -> str:
    return json.dumps(poly_to_dict(poly), indent=indent)


def homog_to_json(h: HomogPoly, indent: int = 2) -> str:
    return json.dumps(homog_to_dict(h), indent=indent)


def homog_from_dict(data: Dict[str, Any]) -> HomogPoly:
    """Rebuild a HomogPoly from the emission format."""
    try:
        names = list(data["vars"])
        raw_terms = data["terms"]
    except (KeyError, TypeError) as e:
        raise ConfigurationError(f"polynomial JSON is missing {e}") from e
    terms = {tuple(t["exp"]): float(t["coeff"]) for t in raw_terms}
    if "degree" in data:
        degree = int(data["degree"])
    elif terms:
        degree = sum(next(iter(terms)))
    else:
        degree = 0
    return HomogPoly(len(names), degree, terms, names)
