from ergm_geometry.checks.check import Check, CheckContext, CheckOutcome, Section, section
from ergm_geometry.geometry.lattice import negative_lattice_check


class NegativeLatticeCheck(Check):
    """Negative lattice condition; necessary for strong Rayleigh-ness, so a
    pass alone leaves the property undetermined."""

    def evaluate(self, context: CheckContext) -> Section:
        result = negative_lattice_check(
            context.distribution(),
            context.config.lattice_slack,
            context.config.max_edges,
        )
        outcome = CheckOutcome.UNDETERMINED if result.passed else CheckOutcome.REFUTED
        return section(outcome, result=result.to_dict())
