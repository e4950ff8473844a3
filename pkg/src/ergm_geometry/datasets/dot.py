"""
Graphviz DOT export for static figures.
"""

from typing import List

from ergm_geometry.graphs.graph import Graph

PALETTE = ["#f7fbff", "#c6dbef", "#6baed6", "#2171b5", "#08306b"]


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: Graph, name: str = "G") -> str:
    """Undirected DOT graph; vertices are shaded by degree."""
    degrees = graph.degrees()
    top = max(degrees, default=0) or 1
    lines: List[str] = [f"graph {_quote(name)} {{", "  node [style=filled];"]
    for v, label in enumerate(graph.labels):
        shade = PALETTE[min(len(PALETTE) - 1, degrees[v] * (len(PALETTE) - 1) // top)]
        font = "white" if shade in PALETTE[3:] else "black"
        lines.append(
            f'  {_quote(label)} [fillcolor="{shade}", fontcolor={font}, degree={degrees[v]}];'
        )
    for index, (u, v) in enumerate(graph.edges):
        lines.append(
            f"  {_quote(graph.labels[u])} -- {_quote(graph.labels[v])} [index={index}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
