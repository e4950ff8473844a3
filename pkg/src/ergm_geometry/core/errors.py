"""
Core error classes for the ergm_geometry library.
"""

from typing import Optional


class ErgmGeometryError(Exception):
    """Base exception for all errors raised by ergm_geometry."""

    pass


class ConfigurationError(ErgmGeometryError):
    """Raised when a configuration or parameter set is invalid."""

    pass


class ParameterFileError(ConfigurationError):
    """Raised when a parameter file is malformed.

    Carries the offending field and, for JSON syntax errors, the line and column.
    """

    def __init__(
        self,
        message: str,
        field: Optional[str] = None,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        location = []
        if line is not None:
            location.append(f"line {line}")
        if column is not None:
            location.append(f"column {column}")
        if field is not None:
            location.append(f"field '{field}'")
        suffix = f" ({', '.join(location)})" if location else ""
        super().__init__(f"{message}{suffix}")
        self.field = field
        self.line = line
        self.column = column


class GraphError(ErgmGeometryError):
    """Raised when a graph, edge subset or edge index is invalid."""

    pass


class GraphFormatError(GraphError):
    """Raised when an edge-list file cannot be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, source: str = ""):
        where = f"{source}:" if source else ""
        prefix = f"{where}line {line}: " if line is not None else where
        super().__init__(f"{prefix}{message}")
        self.line = line
        self.source = source


class EnumerationLimitError(ErgmGeometryError):
    """Raised when full enumeration of 2^m edge subsets exceeds the configured cap."""

    def __init__(self, m: int, cap: int):
        super().__init__(
            f"enumeration infeasible: graph has {m} edges, cap is {cap} "
            f"(~{(1 << m) * 8 / 2**20:.0f} MiB of weights; raise the cap with --max-edges)"
        )
        self.m = m
        self.cap = cap


class DomainError(ErgmGeometryError):
    """Raised when a closed-form expression is evaluated outside its domain."""

    pass


class DatasetError(ErgmGeometryError):
    """Raised for unknown or inconsistent bundled datasets."""

    pass


class GraphSourceError(ErgmGeometryError):
    """Raised when a graph source cannot be read."""

    pass


class UsageError(ErgmGeometryError):
    """Raised for command-line misuse."""

    pass
