"""
Verdict suite: individual checks, their factory and the report they produce.
"""

from ergm_geometry.checks.check import Check, CheckOutcome, PropertyName
from ergm_geometry.checks.check_context import CheckContext
from ergm_geometry.checks.check_names import CheckNames
from ergm_geometry.checks.check_factory import CheckFactory
from ergm_geometry.checks.report import Report
from ergm_geometry.checks.check_suite import CheckSuite

__all__ = [
    "Check",
    "CheckOutcome",
    "PropertyName",
    "CheckContext",
    "CheckNames",
    "CheckFactory",
    "Report",
    "CheckSuite",
]
