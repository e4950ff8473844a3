from typing import Dict, List

from ergm_geometry.core.errors import ConfigurationError


class CheckNames:
    """Central registry of check names and the groups selectable with --which.

    Every Check subclass MUST be added to class_name_to_check_name, or
    get_check_name() raises at runtime.
    """

    NLC = "nlc"
    WAGNER_FALSIFIER = "wagner_falsifier"
    SR_CLOSED_FORM = "sr_closed_form"
    LORENTZIAN = "lorentzian"
    NECESSARY_CONDITIONS = "necessary_conditions"

    # report order
    ALL = [NLC, WAGNER_FALSIFIER, SR_CLOSED_FORM, LORENTZIAN, NECESSARY_CONDITIONS]

    class_name_to_check_name = {
        "NegativeLatticeCheck": NLC,
        "WagnerFalsifierCheck": WAGNER_FALSIFIER,
        "ClosedFormStabilityCheck": SR_CLOSED_FORM,
        "LorentzianCheck": LORENTZIAN,
        "NecessaryConditionsCheck": NECESSARY_CONDITIONS,
    }

    groups: Dict[str, List[str]] = {
        "stability": [NLC, WAGNER_FALSIFIER, SR_CLOSED_FORM],
        "lorentzian": [LORENTZIAN],
        "necessary": [NECESSARY_CONDITIONS],
        "all": ALL,
    }

    @classmethod
    def get_check_name(cls, class_name: str) -> str:
        if class_name not in cls.class_name_to_check_name:
            known = ", ".join(sorted(cls.class_name_to_check_name))
            raise ConfigurationError(
                f"Unknown check class '{class_name}'. Known check classes: {known}. "
                f"Register new checks in CheckNames.class_name_to_check_name."
            )
        return cls.class_name_to_check_name[class_name]

    @classmethod
    def get_group(cls, which: str) -> List[str]:
        if which not in cls.groups:
            raise ConfigurationError(
                f"Unknown check group '{which}'. Choose from: {', '.join(cls.groups)}"
            )
        return list(cls.groups[which])

    @classmethod
    def get_all_names(cls) -> List[str]:
        return list(cls.ALL)
