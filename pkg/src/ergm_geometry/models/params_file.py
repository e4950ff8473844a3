"""
Parameter files.

Markov model: {"T": number > 0, "beta_triangle": number, "beta_stars": [number, ...]}
with optional "model": "edge_triangle" and "star_bound": "cap".
Bernoulli model: {"p": [number in [0, 1], ...]}.
"""

import json
import math
from pathlib import Path
from typing import Any, Dict, Union

from ergm_geometry.core.errors import ConfigurationError, ParameterFileError
from ergm_geometry.core.star_bound import StarBound
from ergm_geometry.models.bernoulli_params import BernoulliParams
from ergm_geometry.models.markov_params import MarkovParams

ModelParams = Union[MarkovParams, BernoulliParams]

MARKOV_FIELDS = {"T", "beta_triangle", "beta_stars", "model", "star_bound"}


def _number(data: Dict[str, Any], key: str, default: float) -> float:
    value = data.get(key, default)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParameterFileError(f"expected a number, got {value!r}", field=key)
    if not math.isfinite(value):
        raise ParameterFileError(f"expected a finite number, got {value!r}", field=key)
    return float(value)


def _number_list(data: Dict[str, Any], key: str) -> list:
    values = data[key]
    if not isinstance(values, list) or not values:
        raise ParameterFileError("expected a non-empty list of numbers", field=key)
    out = []
    for i, value in enumerate(values):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ParameterFileError(
                f"expected a number, got {value!r}", field=f"{key}[{i}]"
            )
        out.append(float(value))
    return out


def params_from_mapping(data: Any) -> ModelParams:
    """Validate a decoded JSON document and build the parameter object."""
    if not isinstance(data, dict):
        raise ParameterFileError("top level must be a JSON object")
    try:
        if "p" in data:
            return BernoulliParams(p=tuple(_number_list(data, "p")))
        unknown = sorted(set(data) - MARKOV_FIELDS)
        if unknown:
            raise ParameterFileError("unknown field", field=unknown[0])
        if "T" not in data:
            raise ParameterFileError("missing required field", field="T")
        if "beta_stars" not in data:
            raise ParameterFileError("missing required field", field="beta_stars")
        model = data.get("model", "markov")
        if model not in ("markov", "edge_triangle"):
            raise ParameterFileError(f"unknown model {model!r}", field="model")
        bound = data.get("star_bound", StarBound.SUBGRAPH_MAX_DEGREE.value)
        try:
            star_bound = StarBound(bound)
        except ValueError:
            raise ParameterFileError(f"unknown star bound {bound!r}", field="star_bound")
        T = _number(data, "T", 1.0)
        if not T > 0:
            raise ParameterFileError(f"T must be > 0, got {T}", field="T")
        return MarkovParams(
            T=T,
            beta_triangle=_number(data, "beta_triangle", 0.0),
            beta_stars=tuple(_number_list(data, "beta_stars")),
            edge_triangle=model == "edge_triangle",
            star_bound=star_bound,
        )
    except ParameterFileError:
        raise
    except ConfigurationError as e:
        raise ParameterFileError(str(e)) from e


def parse_params(text: str) -> ModelParams:
    """Parse a parameter document, reporting JSON syntax errors with line and column."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParameterFileError(f"invalid JSON: {e.msg}", line=e.lineno, column=e.colno) from e
    return params_from_mapping(data)


def load_params(path: Union[str, Path]) -> ModelParams:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigurationError(f"cannot read parameter file {path}: {e}") from e
    return parse_params(text)
