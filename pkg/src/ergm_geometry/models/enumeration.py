"""
Vectorized statistics for every edge subset of a host graph.

Subsets are processed in blocks of consecutive masks so memory stays bounded
by the block size rather than 2^m × n.
"""

import logging
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from ergm_geometry.core.errors import EnumerationLimitError
from ergm_geometry.core.star_bound import StarBound
from ergm_geometry.graphs.graph import Graph
from ergm_geometry.utils.logger import setup_logger

logger = setup_logger(__name__)

BLOCK_SIZE = 1 << 15
INT64_SAFE = 1 << 62
LARGE_TABLE_BYTES = 64 << 20


@dataclass(frozen=True)
class SubsetBlock:
    """Statistics of the subsets with masks start..start+len-1.

    power_sums[:, k-1] holds Σ_v deg(v)^k; triangles holds triangle counts.
    """

    start: int
    power_sums: np.ndarray
    triangles: np.ndarray
    max_degree: np.ndarray

    def __len__(self) -> int:
        return len(self.triangles)


def check_enumerable(graph: Graph, max_edges: int) -> None:
    """Raise EnumerationLimitError when 2^m subsets exceed the cap."""
    if graph.m > max_edges:
        raise EnumerationLimitError(graph.m, max_edges)


def memory_estimate(m: int) -> int:
    """Bytes held by one float64 value per subset."""
    return (1 << m) * 8


def announce_enumeration(m: int) -> None:
    """Log the weight-table size before allocation, at WARNING from LARGE_TABLE_BYTES up."""
    size = memory_estimate(m)
    level = logging.WARNING if size >= LARGE_TABLE_BYTES else logging.INFO
    logger.log(
        level, f"enumerating {1 << m} subsets of m={m} edges (~{size / 2**20:.1f} MiB of weights)"
    )


def iter_subset_blocks(graph: Graph, star_cap: int) -> Iterator[SubsetBlock]:
    """Yield SubsetBlock statistics for all 2^m masks in increasing order."""
    m, n = graph.m, graph.n
    incidence = np.zeros((m, n), dtype=np.int64)
    for i, (u, v) in enumerate(graph.edges):
        incidence[i, u] = 1
        incidence[i, v] = 1
    host_triangles = np.array(graph.triangles(), dtype=np.int64).reshape(-1, 3)
    # exact integer power sums while n·Δ^K fits in int64
    bound = n * max(graph.max_degree(), 1) ** star_cap
    dtype = np.int64 if bound < INT64_SAFE else np.float64
    if dtype is np.float64:
        logger.warning(
            f"power sums up to {bound} exceed int64; using float64 for K={star_cap}"
        )
    shifts = np.arange(m, dtype=np.int64)
    total = 1 << m
    for start in range(0, total, BLOCK_SIZE):
        masks = np.arange(start, min(start + BLOCK_SIZE, total), dtype=np.int64)
        bits = (masks[:, None] >> shifts) & 1
        degrees = (bits @ incidence).astype(dtype)
        power_sums = np.empty((len(masks), star_cap), dtype=dtype)
        current = np.ones_like(degrees)
        for k in range(star_cap):
            current = current * degrees
            power_sums[:, k] = current.sum(axis=1)
        if len(host_triangles):
            present = (
                bits[:, host_triangles[:, 0]]
                & bits[:, host_triangles[:, 1]]
                & bits[:, host_triangles[:, 2]]
            )
            triangles = present.sum(axis=1)
        else:
            triangles = np.zeros(len(masks), dtype=np.int64)
        max_degree = degrees.max(axis=1) if n else np.zeros(len(masks))
        yield SubsetBlock(start, power_sums, triangles, max_degree.astype(np.int64))


def block_effective_stats(
    block: SubsetBlock, n: int, star_bound: StarBound
) -> np.ndarray:
    """Float effective statistics (t_1..t_K, t_triangle) for each subset of a block.

    Each density is an exact integer count divided by n^(|V(H)|), rounded once.
    """
    star_cap = block.power_sums.shape[1]
    stats = np.empty((len(block), star_cap + 1), dtype=float)
    for k in range(1, star_cap + 1):
        column = block.power_sums[:, k - 1] / float(n ** (k + 1))
        if star_bound == StarBound.SUBGRAPH_MAX_DEGREE:
            column = np.where(block.max_degree >= k, column, 0.0)
        stats[:, k - 1] = column
    stats[:, star_cap] = 6.0 * block.triangles / float(n**3)
    return stats
