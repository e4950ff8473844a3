from ergm_geometry.checks.check import (
    Check,
    CheckContext,
    CheckOutcome,
    Section,
    section,
    skipped,
)
from ergm_geometry.geometry.oracles import check_sr_necessary
from ergm_geometry.models.markov_params import MarkovParams


class NecessaryConditionsCheck(Check):
    """Parameter-only necessary conditions; needs no enumeration, so it runs on
    hosts of any size."""

    def evaluate(self, context: CheckContext) -> Section:
        if not isinstance(context.model, MarkovParams):
            return skipped("necessary conditions apply to Markov models only")
        report = check_sr_necessary(context.model, context.graph)
        outcome = CheckOutcome.REFUTED if report.refutes_sr else CheckOutcome.UNDETERMINED
        return section(outcome, conditions=report.to_dict())
