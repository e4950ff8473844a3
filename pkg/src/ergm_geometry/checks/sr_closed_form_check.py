from ergm_geometry.checks.check import (
    Check,
    CheckContext,
    CheckOutcome,
    Section,
    section,
    skipped,
)
from ergm_geometry.core.star_bound import StarBound
from ergm_geometry.geometry.oracles import sr_verdict_cubic
from ergm_geometry.geometry.verdicts import CubicOutcome
from ergm_geometry.models.markov_params import MarkovParams


def closed_form_skip_reason(context: CheckContext) -> str:
    """Why the K3 closed forms do not apply, or "" when they do."""
    graph, model = context.graph, context.model
    if not isinstance(model, MarkovParams):
        return "closed form applies to Markov models only"
    if not (graph.n == 3 and graph.is_complete()):
        return "closed form applies to the host K3 only"
    if model.K > 2:
        return f"closed form needs K <= 2, model has K={model.K}"
    if model.star_bound != StarBound.SUBGRAPH_MAX_DEGREE:
        return "closed form assumes the subgraph_max_degree star bound"
    return ""


class ClosedFormStabilityCheck(Check):
    def evaluate(self, context: CheckContext) -> Section:
        reason = closed_form_skip_reason(context)
        if reason:
            return skipped(reason)
        verdict = sr_verdict_cubic(context.model, context.graph, context.config.cubic_tol)
        outcome = {
            CubicOutcome.SR: CheckOutcome.HOLDS,
            CubicOutcome.NOT_SR: CheckOutcome.REFUTED,
            CubicOutcome.UNDETERMINED: CheckOutcome.UNDETERMINED,
        }[verdict.outcome]
        return section(outcome, verdict=verdict.to_dict(), tol=context.config.cubic_tol)
