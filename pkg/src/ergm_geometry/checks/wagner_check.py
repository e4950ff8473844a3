from ergm_geometry.checks.check import Check, CheckContext, CheckOutcome, Section, section
from ergm_geometry.geometry.stability import certify_product_form, falsify_stability
from ergm_geometry.geometry.verdicts import StabilityOutcome


class WagnerFalsifierCheck(Check):
    """Product-form certificate first, then the randomized Wagner search."""

    def evaluate(self, context: CheckContext) -> Section:
        g = context.polynomial()
        config = context.config
        verdict = certify_product_form(g)
        if verdict.outcome != StabilityOutcome.CERTIFIED_STABLE:
            verdict = falsify_stability(g, config.budget, config.seed, config.threads)
        outcome = {
            StabilityOutcome.VIOLATION: CheckOutcome.REFUTED,
            StabilityOutcome.NO_VIOLATION_FOUND: CheckOutcome.UNDETERMINED,
            StabilityOutcome.CERTIFIED_STABLE: CheckOutcome.HOLDS,
        }[verdict.outcome]
        return section(outcome, verdict=verdict.to_dict(), budget=config.budget)
