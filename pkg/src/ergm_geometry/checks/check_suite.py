"""
Runs a group of checks against one model and assembles the report.
"""

import time
from typing import Dict, Optional

from ergm_geometry import __version__
from ergm_geometry.checks.check import PropertyName, Section, skipped
from ergm_geometry.checks.check_context import CheckContext, ModelParams
from ergm_geometry.checks.check_factory import CheckFactory
from ergm_geometry.checks.check_names import CheckNames
from ergm_geometry.checks.report import Report, property_outcomes
from ergm_geometry.core.check_config import CheckConfig
from ergm_geometry.graphs.graph import Graph
from ergm_geometry.utils.logger import setup_logger

logger = setup_logger(__name__)


class CheckSuite:
    """
    Orchestrates the verdict sections of a check report.

    Sections run in the fixed order of CheckNames.ALL; sections outside the
    requested group are present but marked skipped.
    """

    def __init__(
        self,
        graph: Graph,
        model: ModelParams,
        config: Optional[CheckConfig] = None,
        graph_id: Optional[str] = None,
        factory: Optional[CheckFactory] = None,
    ):
        self.graph = graph
        self.model = model
        self.config = config or CheckConfig.default()
        self.graph_id = graph_id
        self.factory = factory or CheckFactory()

    def run(
        self, which: str = "all", timing: bool = False, command: str = "check"
    ) -> Report:
        requested = CheckNames.get_group(which)
        context = CheckContext(self.graph, self.model, self.config)
        started = time.perf_counter()
        verdicts: Dict[str, Section] = {}
        tested: Dict[str, PropertyName] = {}
        for name in CheckNames.get_all_names():
            if name not in requested:
                verdicts[name] = skipped("not requested")
                continue
            check = self.factory.get_check(name)
            tested[name] = check.tested_property
            verdicts[name] = check.run(context)
        elapsed = time.perf_counter() - started
        properties = property_outcomes({n: verdicts[n] for n in tested}, tested)
        report = Report(
            command=command,
            version=__version__,
            graph={"id": self.graph_id, "n": self.graph.n, "m": self.graph.m},
            params=self.model.to_dict(),
            config={**self.config.to_dict(), "which": which},
            verdicts=verdicts,
            properties=properties,
            timing={"total_seconds": elapsed} if timing else None,
        )
        logger.info(f"check suite '{which}': {report.status.value}")
        return report
