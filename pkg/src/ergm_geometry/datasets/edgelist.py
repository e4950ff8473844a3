"""
Edge-list text format.

One edge per line as two whitespace-separated vertex labels. '#' starts a
comment, blank lines are ignored, and a line holding a single label declares a
vertex with no edges. Labels become vertex indices in first-appearance order.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Set, Tuple, Union

from ergm_geometry.core.errors import GraphFormatError, GraphSourceError
from ergm_geometry.graphs.graph import Graph
from ergm_geometry.utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class ParsedEdgeList:
    graph: Graph
    duplicates: int


def parse_edgelist(text: str, source: str = "") -> ParsedEdgeList:
    """Parse edge-list text.

    Raises:
        GraphFormatError: On a self-loop or a line with more than two tokens,
            reporting the 1-based line number.
    """
    index: Dict[str, int] = {}
    edges: List[Tuple[int, int]] = []
    seen: Set[Tuple[int, int]] = set()
    duplicates = 0

    def vertex(label: str) -> int:
        if label not in index:
            index[label] = len(index)
        return index[label]

    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if len(tokens) == 1:
            vertex(tokens[0])
            continue
        if len(tokens) > 2:
            raise GraphFormatError(
                f"expected 'u v', got {len(tokens)} tokens: {raw.strip()!r}",
                number,
                source,
            )
        a, b = tokens
        if a == b:
            raise GraphFormatError(f"self-loop on vertex {a!r}", number, source)
        u, v = vertex(a), vertex(b)
        key = (min(u, v), max(u, v))
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        edges.append((u, v))

    if not index:
        raise GraphFormatError("edge list declares no vertices", None, source)
    if duplicates:
        logger.warning(f"{source or 'edge list'}: collapsed {duplicates} duplicate edge(s)")
    labels = sorted(index, key=index.__getitem__)
    return ParsedEdgeList(Graph(len(labels), edges, labels), duplicates)


def load_edgelist(path: Union[str, Path]) -> Graph:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise GraphSourceError(f"Failed to read {path}: {e}") from e
    return parse_edgelist(text, str(path)).graph


def to_edgelist(graph: Graph) -> str:
    """Serialize in edge-index order.

    When first appearance in the edges would not reproduce the vertex order
    (isolated vertices, or a vertex first met late), every label is declared
    on its own line first.
    """
    labels = graph.labels
    lines: List[str] = []
    first_seen: Set[int] = set()
    order: List[int] = []
    for u, v in graph.edges:
        for w in (u, v):
            if w not in first_seen:
                first_seen.add(w)
                order.append(w)
    if order != list(range(graph.n)):
        lines.extend(labels)
    lines.extend(f"{labels[u]} {labels[v]}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"
