"""
Core module for the ergm_geometry library.

This module exports the shared building blocks:
- errors: the ErgmGeometryError hierarchy.
- config: CheckConfig for the verdict suite.
- StarBound: the k-star summation bound of the Gibbs exponent.
"""

from ergm_geometry.core.check_config import CheckConfig, DEFAULT_MAX_EDGES
from ergm_geometry.core.star_bound import StarBound
from ergm_geometry.core.errors import (
    ErgmGeometryError,
    ConfigurationError,
    ParameterFileError,
    GraphError,
    GraphFormatError,
    EnumerationLimitError,
    DomainError,
    DatasetError,
    GraphSourceError,
    UsageError,
)

__all__ = [
    "CheckConfig",
    "DEFAULT_MAX_EDGES",
    "StarBound",
    "ErgmGeometryError",
    "ConfigurationError",
    "ParameterFileError",
    "GraphError",
    "GraphFormatError",
    "EnumerationLimitError",
    "DomainError",
    "DatasetError",
    "GraphSourceError",
    "UsageError",
]
