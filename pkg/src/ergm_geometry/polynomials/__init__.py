"""
Generating polynomials: multiaffine, homogenized and their JSON form.
"""

from ergm_geometry.polynomials.multiaffine import (
    MultiAffinePoly,
    generating_polynomial,
    evaluate,
    evaluate_exact,
    partial,
    bilinear_slice,
)
from ergm_geometry.polynomials.homogeneous import (
    HomogPoly,
    homogenize,
    dehomogenize,
    homog_partial,
    derivative_multiset,
    evaluate_homog,
)
from ergm_geometry.polynomials.serialization import (
    poly_to_dict,
    homog_to_dict,
    poly_to_json,
    homog_to_json,
    homog_from_dict,
)

__all__ = [
    "MultiAffinePoly",
    "generating_polynomial",
    "evaluate",
    "evaluate_exact",
    "partial",
    "bilinear_slice",
    "HomogPoly",
    "homogenize",
    "dehomogenize",
    "homog_partial",
    "derivative_multiset",
    "evaluate_homog",
    "poly_to_dict",
    "homog_to_dict",
    "poly_to_json",
    "homog_to_json",
    "homog_from_dict",
]
