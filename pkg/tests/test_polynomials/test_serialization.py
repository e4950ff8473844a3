import json

import pytest

from ergm_geometry.core.errors import ConfigurationError
from ergm_geometry.polynomials.homogeneous import homogenize
from ergm_geometry.polynomials.multiaffine import MultiAffinePoly
from ergm_geometry.polynomials.serialization import (
    homog_from_dict,
    homog_to_dict,
    homog_to_json,
    poly_to_dict,
    poly_to_json,
)


@pytest.fixture
def poly():
    return MultiAffinePoly(2, [0.25, 0.0, 0.5, 0.25])


def test_poly_to_dict_skips_zeros(poly):
    """Zero coefficients are omitted and terms are sorted by exponent"""
    data = poly_to_dict(poly)
    assert data["vars"] == ["x0", "x1"]
    assert data["terms"] == [
        {"exp": [0, 0], "coeff": 0.25},
        {"exp": [0, 1], "coeff": 0.5},
        {"exp": [1, 1], "coeff": 0.25},
    ]
    assert json.loads(poly_to_json(poly)) == data


def test_homog_to_dict(poly):
    data = homog_to_dict(homogenize(poly))
    assert data["vars"] == ["z", "x0", "x1"]
    assert data["degree"] == 2
    assert {"exp": [1, 0, 1], "coeff": 0.5} in data["terms"]
    assert json.loads(homog_to_json(homogenize(poly)))["degree"] == 2


def test_homog_from_dict(poly):
    h = homogenize(poly)
    assert homog_from_dict(homog_to_dict(h)) == h


def test_homog_from_dict_infers_degree():
    h = homog_from_dict({"vars": ["a", "b"], "terms": [{"exp": [2, 1], "coeff": 1.5}]})
    assert h.degree == 3
    assert h.var_names == ("a", "b")


def test_homog_from_dict_missing_key():
    with pytest.raises(ConfigurationError, match="missing"):
        homog_from_dict({"terms": []})
