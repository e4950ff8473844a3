"""
Command-line interface and the JSON schema its reports follow.
"""

import json
from importlib import resources
from typing import Any, Dict

from ergm_geometry.cli.main import build_parser, main, run

SCHEMA_FILE = "report_schema.json"


def load_report_schema() -> Dict[str, Any]:
    """The JSON schema every --format json output validates against."""
    text = resources.files("ergm_geometry.cli").joinpath(SCHEMA_FILE).read_text(
        encoding="utf-8"
    )
    return json.loads(text)


__all__ = ["build_parser", "main", "run", "load_report_schema"]
