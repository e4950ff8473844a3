import io
import math

import numpy as np
import pytest

from ergm_geometry.core.errors import ConfigurationError
from ergm_geometry.graphs.graph import Graph
from ergm_geometry.inference import estimation
from ergm_geometry.inference.chain_config import ChainConfig, GainSchedule
from ergm_geometry.inference.estimation import (
    fit_stochastic_approximation,
    host_for,
    observed_suffstats,
)
from ergm_geometry.inference.sampling import exact_expected_stats
from ergm_geometry.models.markov_params import MarkovParams


def test_host_for_keeps_labels(path3):
    host = host_for(path3)
    assert host.n == 3
    assert host.is_complete()
    assert host.labels == ("a", "b", "c")


def test_observed_suffstats(path3):
    stats = observed_suffstats(path3, MarkovParams.zeros(2))
    # degrees (1, 2, 1) on n = 3
    assert stats.values == pytest.approx((4 / 9, 6 / 27, 0.0))


def test_infinite_tolerance_returns_init(path3):
    init = MarkovParams(beta_stars=(0.3, -0.1), beta_triangle=0.2)
    result = fit_stochastic_approximation(path3, 2, init=init, tol=math.inf)
    assert result.converged
    assert result.iterations == 0
    assert result.final_gap is None
    assert result.params.theta == init.theta
    assert result.to_dict()["tol"] is None


def test_zero_iterations(path3):
    result = fit_stochastic_approximation(
        path3, 1, schedule=GainSchedule(max_iter=0), cfg=ChainConfig(sweeps=10, batches=2)
    )
    assert result.iterations == 0
    assert not result.converged
    assert result.params.theta == (0.0, 0.0)


def test_star_cap_validation(path3):
    with pytest.raises(ConfigurationError, match="K must be in 1..2"):
        fit_stochastic_approximation(path3, 3)
    with pytest.raises(ConfigurationError, match="init has K=1"):
        fit_stochastic_approximation(path3, 2, init=MarkovParams.zeros(1))


def test_degeneracy_warning(path3):
    """A chain pinned at the complete graph is flagged once"""
    result = fit_stochastic_approximation(
        path3,
        1,
        init=MarkovParams(beta_stars=(200.0,)),
        schedule=GainSchedule(max_iter=2),
        cfg=ChainConfig(sweeps=50, burnin=5, batches=5),
        tol=0.0,
    )
    assert result.degenerate
    assert len(result.warnings) == 1
    assert result.iterations == 2


def test_trajectory_csv(path3):
    result = fit_stochastic_approximation(
        path3,
        2,
        schedule=GainSchedule(max_iter=3, precondition=True),
        cfg=ChainConfig(sweeps=100, batches=4),
        tol=0.0,
    )
    stream = io.StringIO()
    result.to_csv(stream)
    lines = stream.getvalue().splitlines()
    assert lines[0] == "iteration,beta_1,beta_2,beta_triangle,moment_gap"
    assert len(lines) == 1 + result.iterations == 4
    assert lines[1].startswith("0,0.0,0.0,0.0,")


def test_triangle_coefficient_held_without_triangle_term(path3):
    result = fit_stochastic_approximation(
        path3,
        1,
        include_triangle=False,
        schedule=GainSchedule(max_iter=3),
        cfg=ChainConfig(sweeps=100, batches=4),
        tol=0.0,
    )
    assert result.params.beta_triangle == 0.0


def test_fit_at_zero_parameters(k3):
    """Statistics generated at theta = 0 fit back to near zero"""
    target = exact_expected_stats(k3, MarkovParams.zeros(2))
    passed = 0
    for seed in range(20):
        result = fit_stochastic_approximation(
            k3,
            2,
            cfg=ChainConfig(sweeps=4000, burnin=200, seed=seed),
            schedule=GainSchedule(max_iter=50),
            tol=0.02,
            observed_stats=target,
        )
        passed += result.converged and np.linalg.norm(result.params.theta) <= 0.05
    assert passed >= 18


def test_unconverged_fit_returns_measured_parameters(path3):
    """final_gap belongs to the returned theta, not to a later unmeasured update"""
    result = fit_stochastic_approximation(
        path3,
        2,
        schedule=GainSchedule(max_iter=3, a0=5.0),
        cfg=ChainConfig(sweeps=100, batches=4),
        tol=0.0,
    )
    assert not result.converged
    last = result.trajectory[-1]
    assert result.params.theta == last.theta
    assert result.final_gap == last.gap


def test_chain_length_follows_schedule(path3, mocker):
    spy = mocker.spy(estimation, "sample_suffstats")
    schedule = GainSchedule(max_iter=40, k0=10.0)
    fit_stochastic_approximation(
        path3, 1, schedule=schedule, cfg=ChainConfig(sweeps=20, batches=2), tol=0.0
    )
    sweeps = [call.args[2].sweeps for call in spy.call_args_list]
    assert sweeps[0] == 20
    assert sweeps == sorted(sweeps)
    assert sweeps[-1] == 40
    seeds = [call.args[2].seed for call in spy.call_args_list]
    assert seeds == list(range(40))


def test_default_fit_chain_is_short(path3, mocker):
    spy = mocker.spy(estimation, "sample_suffstats")
    fit_stochastic_approximation(path3, 1, schedule=GainSchedule(max_iter=1), tol=0.0)
    assert spy.call_args_list[0].args[2].to_dict() == ChainConfig.for_fit().to_dict()


def test_refit_from_estimate_stays_put(k3):
    """Restarting the fit at its own estimate moves theta by at most the noise level"""
    target = exact_expected_stats(k3, MarkovParams.zeros(2))
    schedule = GainSchedule(max_iter=50)
    for seed in range(20):
        cfg = ChainConfig(sweeps=4000, burnin=200, seed=seed)
        first = fit_stochastic_approximation(
            k3, 2, cfg=cfg, schedule=schedule, tol=0.02, observed_stats=target
        )
        if first.converged:
            break
    assert first.converged
    again = fit_stochastic_approximation(
        k3, 2, init=first.params, cfg=cfg, schedule=schedule, tol=0.02, observed_stats=target
    )
    assert again.converged
    shift = np.subtract(again.params.theta, first.params.theta)
    assert np.linalg.norm(shift) <= 0.05
