"""
Monte Carlo and exact expectations of the sufficient statistics.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, Tuple

import numpy as np

from ergm_geometry.core.check_config import DEFAULT_MAX_EDGES
from ergm_geometry.graphs.graph import Graph
from ergm_geometry.inference.chain_config import ChainConfig
from ergm_geometry.inference.glauber import GlauberSampler
from ergm_geometry.inference.suff_stats import SuffStats
from ergm_geometry.models.enumeration import block_effective_stats, iter_subset_blocks
from ergm_geometry.models.markov import markov_distribution
from ergm_geometry.models.markov_params import MarkovParams
from ergm_geometry.utils.logger import setup_logger

logger = setup_logger(__name__)


@dataclass(frozen=True)
class ChainSummary:
    """Post-burnin averages over all chains.

    Attributes:
        mean: Sample mean of the statistics.
        stderr: Batch-means standard error per component (NaN with < 2 batches).
        variance: Sample variance per component.
        samples: Total recorded samples.
        boundary_fraction: Share of samples at the empty or complete state.
        seeds: Seed of each chain.
    """

    mean: SuffStats
    stderr: Tuple[float, ...]
    variance: Tuple[float, ...]
    samples: int
    boundary_fraction: float
    seeds: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mean": self.mean.to_dict(),
            "stderr": [None if np.isnan(s) else s for s in self.stderr],
            "samples": self.samples,
            "boundary_fraction": self.boundary_fraction,
            "seeds": list(self.seeds),
        }


def _run_chain(
    g: Graph, p: MarkovParams, cfg: ChainConfig, seed: int
) -> Tuple[np.ndarray, int]:
    """Recorded statistics (samples × (K+1)) and the number of boundary samples."""
    sampler = GlauberSampler(g, p, np.random.default_rng(seed))
    for _ in range(cfg.burnin):
        sampler.sweep()
    records = np.empty((cfg.samples_per_chain, p.K + 1))
    boundary = 0
    row = 0
    for sweep in range(1, cfg.samples_per_chain * cfg.thin + 1):
        sampler.sweep()
        if sweep % cfg.thin == 0:
            records[row] = sampler.stats()
            boundary += sampler.is_boundary()
            row += 1
    return records, boundary


def _batch_means(records: np.ndarray, batches: int) -> np.ndarray:
    batches = min(batches, len(records))
    size = len(records) // batches if batches else 0
    if size == 0:
        return np.empty((0, records.shape[1]))
    trimmed = records[: batches * size]
    return trimmed.reshape(batches, size, -1).mean(axis=1)


def sample_suffstats(
    g: Graph, p: MarkovParams, cfg: ChainConfig, threads: int = 1
) -> ChainSummary:
    """Glauber estimate of E[stats] from cfg.chains chains seeded seed, seed + 1, ...

    Chains run on a thread pool when threads > 1; the result does not depend on
    the thread count.
    """
    p.validate_for(g)
    seeds = tuple(cfg.seed + i for i in range(cfg.chains))
    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        runs = list(executor.map(lambda s: _run_chain(g, p, cfg, s), seeds))
    records = np.concatenate([r for r, _ in runs])
    boundary = sum(b for _, b in runs)
    means = np.concatenate([_batch_means(r, cfg.batches) for r, _ in runs])
    if len(means) >= 2:
        stderr = means.std(axis=0, ddof=1) / np.sqrt(len(means))
    else:
        stderr = np.full(p.K + 1, np.nan)
    variance = records.var(axis=0, ddof=1) if len(records) > 1 else np.zeros(p.K + 1)
    summary = ChainSummary(
        mean=SuffStats.from_vector(records.mean(axis=0)),
        stderr=tuple(float(s) for s in stderr),
        variance=tuple(float(v) for v in variance),
        samples=len(records),
        boundary_fraction=boundary / len(records),
        seeds=seeds,
    )
    logger.debug(
        f"{summary.samples} samples from {len(seeds)} chain(s), "
        f"boundary fraction {summary.boundary_fraction:.3f}"
    )
    return summary


def exact_expected_stats(
    g: Graph, p: MarkovParams, max_edges: int = DEFAULT_MAX_EDGES
) -> SuffStats:
    """Σ_S P(S) · stats(S) by full enumeration."""
    probabilities = markov_distribution(g, p, max_edges).probabilities()
    total = np.zeros(p.K + 1)
    for block in iter_subset_blocks(g, p.K):
        stats = block_effective_stats(block, g.n, p.star_bound)
        total += probabilities[block.start : block.start + len(block)] @ stats
    return SuffStats.from_vector(total)
