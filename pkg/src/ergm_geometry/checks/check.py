"""
Base interface for one verdict section of a check report.
"""

from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Dict

from ergm_geometry.checks.check_context import CheckContext
from ergm_geometry.checks.check_names import CheckNames
from ergm_geometry.core.errors import EnumerationLimitError
from ergm_geometry.utils.logger import setup_logger

logger = setup_logger(__name__)

Section = Dict[str, Any]


class CheckOutcome(str, Enum):
    """What a section says about the property it tests."""

    HOLDS = "holds"
    REFUTED = "refuted"
    UNDETERMINED = "undetermined"
    SKIPPED = "skipped"

    def __str__(self) -> str:
        return self.value


class PropertyName(str, Enum):
    STRONGLY_RAYLEIGH = "strongly_rayleigh"
    LORENTZIAN = "lorentzian"

    def __str__(self) -> str:
        return self.value


def section(outcome: CheckOutcome, **fields: Any) -> Section:
    return {"outcome": outcome.value, **fields}


def skipped(reason: str) -> Section:
    return section(CheckOutcome.SKIPPED, reason=reason)


class Check(ABC):
    """
    Abstract base class for a single check.

    Subclasses must implement:
      - tested_property: the property the section speaks about
      - evaluate(): build the section for a context
    """

    tested_property: PropertyName = PropertyName.STRONGLY_RAYLEIGH

    def get_check_name(self) -> str:
        return CheckNames.get_check_name(self.__class__.__name__)

    def run(self, context: CheckContext) -> Section:
        """Evaluate, turning an infeasible enumeration into a skipped section."""
        try:
            result = self.evaluate(context)
        except EnumerationLimitError as e:
            logger.warning(f"{self.get_check_name()} skipped: {e}")
            return skipped(str(e))
        logger.debug(f"{self.get_check_name()}: {result['outcome']}")
        return result

    @abstractmethod
    def evaluate(self, context: CheckContext) -> Section:
        pass
