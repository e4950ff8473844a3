"""
Factory class for creating Check instances.
"""

from typing import Dict, Type

from ergm_geometry.checks.check import Check
from ergm_geometry.checks.check_names import CheckNames
from ergm_geometry.checks.lorentzian_check import LorentzianCheck
from ergm_geometry.checks.necessary_check import NecessaryConditionsCheck
from ergm_geometry.checks.nlc_check import NegativeLatticeCheck
from ergm_geometry.checks.sr_closed_form_check import ClosedFormStabilityCheck
from ergm_geometry.checks.wagner_check import WagnerFalsifierCheck
from ergm_geometry.core.errors import ConfigurationError


class CheckFactory:
    # Class-level shared default; instances copy it, so mutate self._checks only.
    _default_checks: Dict[str, Type[Check]] = {
        CheckNames.NLC: NegativeLatticeCheck,
        CheckNames.WAGNER_FALSIFIER: WagnerFalsifierCheck,
        CheckNames.SR_CLOSED_FORM: ClosedFormStabilityCheck,
        CheckNames.LORENTZIAN: LorentzianCheck,
        CheckNames.NECESSARY_CONDITIONS: NecessaryConditionsCheck,
    }

    def __init__(self) -> None:
        self._checks: Dict[str, Type[Check]] = self._default_checks.copy()

    def register_check(self, name: str, check_class: Type[Check]) -> None:
        self._checks[name] = check_class

    def get_check(self, name: str) -> Check:
        """
        Retrieve a Check instance by name.

        Raises:
            ConfigurationError: If no check is registered under name.
        """
        check_class = self._checks.get(name)
        if check_class is None:
            raise ConfigurationError(f"No check registered for name '{name}'")
        return check_class()
