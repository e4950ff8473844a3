from ergm_geometry.checks.check import (
    Check,
    CheckContext,
    CheckOutcome,
    PropertyName,
    Section,
    section,
)
from ergm_geometry.checks.sr_closed_form_check import closed_form_skip_reason
from ergm_geometry.geometry.lorentzian import is_lorentzian_distribution
from ergm_geometry.geometry.oracles import lorentzian_verdict_cubic


class LorentzianCheck(Check):
    """Exact Lorentzian verdict; on K3 the closed-form answer is echoed alongside."""

    tested_property = PropertyName.LORENTZIAN

    def evaluate(self, context: CheckContext) -> Section:
        verdict = is_lorentzian_distribution(
            context.distribution(), context.config.tol, context.config.max_edges
        )
        oracle = None
        if not closed_form_skip_reason(context):
            oracle = lorentzian_verdict_cubic(context.model, context.graph).value
        outcome = CheckOutcome.HOLDS if verdict.is_lorentzian else CheckOutcome.REFUTED
        return section(
            outcome, verdict=verdict.to_dict(), closed_form=oracle, tol=context.config.tol
        )
