"""
Check report: model echo, verdict sections, summary and exit status.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ergm_geometry.checks.check import CheckOutcome, PropertyName, Section

EXIT_CODES = {
    CheckOutcome.HOLDS: 0,
    CheckOutcome.REFUTED: 1,
    CheckOutcome.UNDETERMINED: 2,
}


def combine(outcomes: List[CheckOutcome]) -> CheckOutcome:
    """Any refutation wins, then any proof; skipped sections count for nothing."""
    if CheckOutcome.REFUTED in outcomes:
        return CheckOutcome.REFUTED
    if CheckOutcome.HOLDS in outcomes:
        return CheckOutcome.HOLDS
    return CheckOutcome.UNDETERMINED


@dataclass
class Report:
    """A reproducible record of one check run.

    timing is None unless requested, so identical inputs give identical bytes.
    """

    command: str
    version: str
    graph: Dict[str, Any]
    params: Dict[str, Any]
    config: Dict[str, Any]
    verdicts: Dict[str, Section]
    properties: Dict[str, str]
    timing: Optional[Dict[str, float]] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> CheckOutcome:
        values = [CheckOutcome(v) for v in self.properties.values()]
        if CheckOutcome.REFUTED in values:
            return CheckOutcome.REFUTED
        if values and all(v == CheckOutcome.HOLDS for v in values):
            return CheckOutcome.HOLDS
        return CheckOutcome.UNDETERMINED

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "command": self.command,
            "version": self.version,
            "graph": self.graph,
            "params": self.params,
            "config": self.config,
            "verdicts": self.verdicts,
            "summary": {"status": self.status.value, "properties": self.properties},
            "timing": self.timing,
        }
        data.update(self.extra)
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"graph: {self.graph.get('id')} (n={self.graph['n']}, m={self.graph['m']})"]
        for name, sec in self.verdicts.items():
            reason = f" ({sec['reason']})" if "reason" in sec else ""
            lines.append(f"{name}: {sec['outcome']}{reason}")
        if self.timing is not None:
            lines.append(f"time: {self.timing['total_seconds']:.3f}s")
        lines.append(f"status: {self.status.value}")
        for prop, outcome in self.properties.items():
            lines.append(f"{prop}: {outcome}")
        return "\n".join(lines) + "\n"


def property_outcomes(
    requested: Dict[str, Section], tested: Dict[str, PropertyName]
) -> Dict[str, str]:
    """Combine the requested sections per tested property."""
    grouped: Dict[str, List[CheckOutcome]] = {}
    for name, sec in requested.items():
        grouped.setdefault(tested[name].value, []).append(CheckOutcome(sec["outcome"]))
    return {prop: combine(outcomes).value for prop, outcomes in grouped.items()}
