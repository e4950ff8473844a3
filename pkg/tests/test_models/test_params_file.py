import pytest

from ergm_geometry.core.errors import ConfigurationError, ParameterFileError
from ergm_geometry.core.star_bound import StarBound
from ergm_geometry.models.bernoulli_params import BernoulliParams
from ergm_geometry.models.markov_params import MarkovParams
from ergm_geometry.models.params_file import load_params, params_from_mapping, parse_params


def test_markov_document():
    params = parse_params('{"T": 2, "beta_triangle": -1, "beta_stars": [0.5, -0.25]}')
    assert params == MarkovParams(T=2.0, beta_triangle=-1.0, beta_stars=(0.5, -0.25))


def test_edge_triangle_and_cap():
    params = params_from_mapping(
        {"T": 1, "beta_stars": [0.3], "model": "edge_triangle", "star_bound": "cap"}
    )
    assert params.edge_triangle
    assert params.star_bound == StarBound.CAP
    assert params.beta_triangle == 0.0


def test_bernoulli_document():
    assert parse_params('{"p": [0.1, 0.2]}') == BernoulliParams(p=(0.1, 0.2))


def test_json_syntax_error_has_location():
    """Test that JSON syntax errors report line and column"""
    with pytest.raises(ParameterFileError) as exc_info:
        parse_params('{\n  "T": 1,\n  "beta_stars": [1,\n}')
    assert exc_info.value.line == 4
    assert "line 4" in str(exc_info.value)


@pytest.mark.parametrize(
    "data, field",
    [
        ({"beta_stars": [0.0]}, "T"),
        ({"T": 1}, "beta_stars"),
        ({"T": 1, "beta_stars": []}, "beta_stars"),
        ({"T": 1, "beta_stars": ["a"]}, "beta_stars[0]"),
        ({"T": "hot", "beta_stars": [0.0]}, "T"),
        ({"T": -1, "beta_stars": [0.0]}, "T"),
        ({"T": 1, "beta_stars": [0.0], "gamma": 1}, "gamma"),
        ({"T": 1, "beta_stars": [0.0], "model": "ising"}, "model"),
        ({"T": 1, "beta_stars": [0.0], "star_bound": "none"}, "star_bound"),
    ],
)
def test_malformed_fields(data, field):
    """Test that the offending field is named"""
    with pytest.raises(ParameterFileError) as exc_info:
        params_from_mapping(data)
    assert exc_info.value.field == field


def test_model_level_errors_are_wrapped():
    with pytest.raises(ParameterFileError, match="no k-star terms"):
        params_from_mapping({"T": 1, "beta_stars": [0.0, 1.0], "model": "edge_triangle"})


def test_top_level_must_be_object():
    with pytest.raises(ParameterFileError, match="JSON object"):
        params_from_mapping([1, 2])


def test_load_params(tmp_path):
    path = tmp_path / "params.json"
    path.write_text('{"T": 1, "beta_stars": [1]}')
    assert load_params(path).beta_stars == (1.0,)
    with pytest.raises(ConfigurationError, match="cannot read parameter file"):
        load_params(tmp_path / "missing.json")
