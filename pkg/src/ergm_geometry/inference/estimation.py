"""
Moment-matching maximum likelihood for Markov random graphs by Robbins–Monro
stochastic approximation:

    θ_{k+1} = θ_k + a_k · (s_obs - E_θk[stats])

with E_θk estimated by Glauber sampling on the complete graph over the
observed vertex set. T is fixed to 1, so the reported β's are β/T.
"""

import math
from typing import List, Optional

import numpy as np

from ergm_geometry.core.errors import ConfigurationError
from ergm_geometry.graphs.edge_subset import EdgeSubset
from ergm_geometry.graphs.graph import Graph
from ergm_geometry.inference.chain_config import ChainConfig, GainSchedule
from ergm_geometry.inference.fit_result import FitRecord, FitResult
from ergm_geometry.inference.sampling import sample_suffstats
from ergm_geometry.inference.suff_stats import SuffStats, state_stats
from ergm_geometry.models.markov_params import MarkovParams
from ergm_geometry.utils.logger import setup_logger

logger = setup_logger(__name__)

DEGENERACY_THRESHOLD = 0.9
MIN_VARIANCE = 1e-12


def host_for(observed: Graph) -> Graph:
    """The complete graph on the observed vertex set."""
    return Graph.complete(observed.n, observed.labels)


def observed_suffstats(
    observed: Graph, params: MarkovParams, host: Optional[Graph] = None
) -> SuffStats:
    """Statistics of the observed graph as a state of the complete host."""
    host = host or host_for(observed)
    subset = EdgeSubset.from_indices(host.edge_index(u, v) for u, v in observed.edges)
    return state_stats(host, subset, params.K, params.star_bound)


def fit_stochastic_approximation(
    observed: Graph,
    K: int,
    include_triangle: bool = True,
    init: Optional[MarkovParams] = None,
    schedule: Optional[GainSchedule] = None,
    cfg: Optional[ChainConfig] = None,
    tol: float = 0.02,
    observed_stats: Optional[SuffStats] = None,
    threads: int = 1,
) -> FitResult:
    """Fit θ = (β_1..β_K, β) so the model's expected statistics match the observed.

    Iteration k samples with seed cfg.seed + k for schedule.sweeps_at(k, cfg.sweeps)
    sweeps. Without include_triangle the triangle coefficient stays at its
    initial value and is left out of the gap. A chain spending more than 90% of
    its samples at the empty or complete graph is reported as degenerate in the
    result's warnings. final_gap is the gap measured at the returned θ.
    """
    schedule = schedule or GainSchedule.default()
    cfg = cfg or ChainConfig.for_fit()
    host = host_for(observed)
    if K < 1 or K > host.max_degree():
        raise ConfigurationError(f"K must be in 1..{host.max_degree()}, got {K}")
    if init is None:
        init = MarkovParams.zeros(K)
    if init.K != K:
        raise ConfigurationError(f"init has K={init.K}, expected {K}")
    params = init.with_theta(init.theta)
    target = (
        observed_stats
        if observed_stats is not None
        else observed_suffstats(observed, params, host)
    )
    if len(target) != K + 1:
        raise ConfigurationError(f"observed statistics need {K + 1} entries, got {len(target)}")

    if math.isinf(tol) and tol > 0:
        return FitResult(params, (), True, None, tol, target)

    active = np.ones(K + 1, dtype=bool)
    active[K] = include_triangle
    theta = np.array(params.theta)
    trajectory: List[FitRecord] = []
    warnings: List[str] = []
    scale = np.ones(K + 1)
    converged = False
    gap: Optional[float] = None

    for k in range(schedule.max_iter):
        current = params.with_theta(theta)
        chain = cfg.with_seed(cfg.seed + k).with_sweeps(schedule.sweeps_at(k, cfg.sweeps))
        summary = sample_suffstats(host, current, chain, threads)
        diff = np.where(active, target.vector - summary.mean.vector, 0.0)
        gap = float(np.linalg.norm(diff))
        record = FitRecord(
            k, tuple(float(t) for t in theta), gap, summary.boundary_fraction
        )
        trajectory.append(record)
        logger.debug(f"iteration {k}: gap {gap:.4g}, theta {np.round(theta, 4).tolist()}")
        if summary.boundary_fraction > DEGENERACY_THRESHOLD:
            message = (
                f"degenerate chain at iteration {k}: {summary.boundary_fraction:.0%} "
                f"of samples at the empty or complete graph"
            )
            if not warnings:
                logger.warning(message)
                warnings.append(message)
        if gap <= tol:
            converged = True
            break
        if k == 0 and schedule.precondition:
            scale = 1.0 / np.maximum(np.array(summary.variance), MIN_VARIANCE)
        step = schedule.gain(k) * scale * diff
        if schedule.max_step is not None:
            step = np.clip(step, -schedule.max_step, schedule.max_step)
        theta = theta + step

    if trajectory and not converged:
        theta = np.array(trajectory[-1].theta)
    result = FitResult(
        params.with_theta(theta),
        tuple(trajectory),
        converged,
        gap,
        tol,
        target,
        tuple(warnings),
    )
    logger.info(
        f"fit {'converged' if converged else 'stopped'} after {result.iterations} "
        f"iteration(s), gap {gap}"
    )
    return result
