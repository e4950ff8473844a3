"""
Loads edge lists from HTTP(S) URLs.
"""

from typing import Optional

import requests

from ergm_geometry.core.errors import GraphSourceError
from ergm_geometry.datasets.edgelist import parse_edgelist
from ergm_geometry.datasets.sources.graph_source import GraphSource
from ergm_geometry.graphs.graph import Graph


class HttpSource(GraphSource):
    """
    Loads edge lists from HTTP(S) URLs.

    If no session is provided, requests.get is used directly.
    """

    def __init__(self, session: Optional[requests.Session] = None, timeout: int = 30) -> None:
        self.session = session
        self.timeout = timeout
        self.headers = {"User-Agent": "ergm-geometry/1.0"}

    def get_source_type(self) -> str:
        return "http"

    def fetch_text(self, url: str) -> str:
        """
        Download the document at url.

        Raises:
            GraphSourceError: If the document cannot be downloaded.
        """
        getter = self.session.get if self.session is not None else requests.get
        try:
            response = getter(url, timeout=self.timeout, headers=self.headers)
        except requests.exceptions.RequestException as e:
            raise GraphSourceError(f"Network error downloading {url}: {e}") from e
        if response.status_code == 404:
            raise GraphSourceError(
                f"Edge list not found (HTTP 404) for {url}. The requested resource does not exist."
            )
        if response.status_code != 200:
            raise GraphSourceError(f"HTTP {response.status_code}: {url}")
        return response.text

    def load(self, url: str) -> Graph:
        return parse_edgelist(self.fetch_text(url), url).graph

    def can_handle(self, locator: Optional[str]) -> bool:
        if locator is None:
            return False
        return locator.startswith("http://") or locator.startswith("https://")
