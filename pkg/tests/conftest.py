import json

import numpy as np
import pytest

from ergm_geometry.graphs.graph import Graph
from ergm_geometry.models.bernoulli import bernoulli_distribution
from ergm_geometry.models.bernoulli_params import BernoulliParams
from ergm_geometry.models.markov_params import MarkovParams


@pytest.fixture
def k3():
    """Triangle host with edges (0,1), (0,2), (1,2)"""
    return Graph.complete(3)


@pytest.fixture
def k4():
    return Graph.complete(4)


@pytest.fixture
def path3():
    """Path a - b - c: no triangle, maximum degree 2"""
    return Graph(3, [(0, 1), (1, 2)], labels=["a", "b", "c"])


@pytest.fixture
def zero_params():
    return MarkovParams.zeros(1)


@pytest.fixture
def cubic():
    """Factory for the cubic model on K3: edge, 2-star and triangle terms"""

    def _cubic(beta2: float, beta: float, beta1: float = 0.0, T: float = 1.0) -> MarkovParams:
        return MarkovParams(T=T, beta_triangle=beta, beta_stars=(beta1, beta2))

    return _cubic


@pytest.fixture
def write_params(tmp_path):
    """Write a parameter mapping to a JSON file and return its path"""

    def _write(data, name="params.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)

    return _write


@pytest.fixture(scope="session")
def bernoulli_instances():
    """20 independent-edge distributions on random hosts with 2 to 8 edges"""
    rng = np.random.default_rng(20)
    instances = []
    for i in range(20):
        n = 5
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        m = 2 + i % 7
        chosen = rng.choice(len(pairs), size=m, replace=False)
        g = Graph(n, [pairs[k] for k in sorted(chosen)])
        params = BernoulliParams(p=tuple(float(p) for p in rng.uniform(0.05, 0.95, size=m)))
        instances.append(bernoulli_distribution(g, params))
    return instances
