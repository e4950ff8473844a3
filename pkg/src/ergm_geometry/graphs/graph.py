"""
Simple undirected labeled graph with a stable edge indexing.

Edge index order is fixed at construction and never changes; the variables of every
generating polynomial built on a graph are indexed by it.
"""

from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ergm_geometry.core.errors import GraphError

Edge = Tuple[int, int]


class Graph:
    """A simple undirected graph on vertices 0..n-1.

    Attributes:
        n: Vertex count.
        edges: Edges as (u, v) pairs with u < v, in index order 0..m-1.
        labels: Vertex names; defaults to the decimal vertex indices.
    """

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence[int]],
        labels: Optional[Sequence[str]] = None,
    ):
        if n < 1:
            raise GraphError(f"vertex count must be positive, got {n}")
        normalized: List[Edge] = []
        seen: Dict[Edge, int] = {}
        for index, pair in enumerate(edges):
            if len(pair) != 2:
                raise GraphError(f"edge {index} is not a vertex pair: {pair!r}")
            u, v = int(pair[0]), int(pair[1])
            if u == v:
                raise GraphError(f"edge {index} is a self-loop on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(
                    f"edge {index} = ({u}, {v}) has an endpoint outside 0..{n - 1}"
                )
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(
                    f"edge {index} duplicates edge {seen[key]} ({key[0]}, {key[1]})"
                )
            seen[key] = index
            normalized.append(key)

        if labels is None:
            labels = [str(i) for i in range(n)]
        if len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")

        self._n = n
        self._edges: Tuple[Edge, ...] = tuple(normalized)
        self._labels: Tuple[str, ...] = tuple(str(label) for label in labels)
        self._edge_index = seen
        neighbours: List[set] = [set() for _ in range(n)]
        for u, v in self._edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        self._neighbours: Tuple[FrozenSet[int], ...] = tuple(
            frozenset(s) for s in neighbours
        )

    @classmethod
    def complete(cls, n: int, labels: Optional[Sequence[str]] = None) -> "Graph":
        """K_n with edges in lexicographic order; K_3 gets (0,1), (0,2), (1,2)."""
        return cls(n, combinations(range(n), 2), labels)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    def edge(self, index: int) -> Edge:
        """Return the endpoints of edge `index`."""
        self.check_edge_index(index)
        return self._edges[index]

    def check_edge_index(self, index: int) -> None:
        if not 0 <= index < self.m:
            raise GraphError(f"edge index {index} out of range 0..{self.m - 1}")

    def edge_index(self, u: int, v: int) -> int:
        """Return the index of the edge {u, v}."""
        key = (min(u, v), max(u, v))
        if key not in self._edge_index:
            raise GraphError(f"({u}, {v}) is not an edge")
        return self._edge_index[key]

    def neighbours(self, v: int) -> FrozenSet[int]:
        return self._neighbours[v]

    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(s) for s in self._neighbours)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def triangles(self) -> List[Tuple[int, int, int]]:
        """Every triangle of the host as a sorted triple of edge indices."""
        found = []
        for u, v in self._edges:
            for w in sorted(self._neighbours[u] & self._neighbours[v]):
                if w > v:
                    found.append(
                        tuple(
                            sorted(
                                (
                                    self._edge_index[(u, v)],
                                    self._edge_index[(u, w)],
                                    self._edge_index[(v, w)],
                                )
                            )
                        )
                    )
        return found

    def has_triangle(self) -> bool:
        return any(
            self._neighbours[u] & self._neighbours[v] for u, v in self._edges
        )

    def has_k_star(self, k: int) -> bool:
        """True if some vertex has degree at least k."""
        return self.max_degree() >= k

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def to_networkx(self) -> nx.Graph:
        """Convert to a networkx graph; nodes are vertex indices with a `label` attribute."""
        graph = nx.Graph()
        for i, label in enumerate(self._labels):
            graph.add_node(i, label=label)
        for index, (u, v) in enumerate(self._edges):
            graph.add_edge(u, v, index=index)
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._n == other._n
            and self._edges == other._edges
            and self._labels == other._labels
        )

    def __hash__(self) -> int:
        return hash((self._n, self._edges, self._labels))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"
