"""
Parameters of the Markov random graph (triangle + k-star Gibbs field).
"""

from dataclasses import dataclass, field, replace
from typing import Any, Dict, Sequence, Tuple

from ergm_geometry.core.errors import ConfigurationError
from ergm_geometry.core.star_bound import StarBound
from ergm_geometry.graphs.graph import Graph


@dataclass(frozen=True)
class MarkovParams:
    """Temperature T and coefficients (β, β_1..β_K) of the Gibbs exponent

        (1/T) · (β t(triangle, G_S) + Σ_k β_k t(S_k, G_S)).

    Attributes:
        T: Temperature, > 0.
        beta_triangle: Triangle coefficient β.
        beta_stars: k-star coefficients β_1..β_K; K = len(beta_stars) >= 1.
        edge_triangle: Marks the edge-triangle submodel, which has no k-star
            terms beyond the edge term. This is a distinct model, not the cubic
            model with β_2 = 0.
        star_bound: Upper limit of the k-star sum.
    """

    T: float = 1.0
    beta_triangle: float = 0.0
    beta_stars: Tuple[float, ...] = (0.0,)
    edge_triangle: bool = False
    star_bound: StarBound = field(default=StarBound.SUBGRAPH_MAX_DEGREE)

    def __post_init__(self) -> None:
        object.__setattr__(self, "beta_stars", tuple(float(b) for b in self.beta_stars))
        object.__setattr__(self, "star_bound", StarBound(self.star_bound))
        if not self.T > 0:
            raise ConfigurationError(f"temperature T must be > 0, got {self.T}")
        if len(self.beta_stars) < 1:
            raise ConfigurationError("beta_stars needs at least one entry (K >= 1)")
        if self.edge_triangle and any(b != 0 for b in self.beta_stars[1:]):
            raise ConfigurationError(
                "the edge-triangle model has no k-star terms with k >= 2"
            )

    @classmethod
    def edge_triangle_model(
        cls, beta_edge: float = 0.0, beta_triangle: float = 0.0, T: float = 1.0
    ) -> "MarkovParams":
        """Edge-triangle submodel: only β_1 and β."""
        return cls(T=T, beta_triangle=beta_triangle, beta_stars=(beta_edge,), edge_triangle=True)

    @classmethod
    def zeros(cls, star_cap: int, T: float = 1.0) -> "MarkovParams":
        return cls(T=T, beta_stars=(0.0,) * star_cap)

    @property
    def K(self) -> int:
        return len(self.beta_stars)

    def beta_star(self, k: int) -> float:
        """β_k, or 0 when k exceeds the star cap."""
        if 1 <= k <= self.K:
            return self.beta_stars[k - 1]
        return 0.0

    @property
    def theta(self) -> Tuple[float, ...]:
        """Natural-parameter vector (β_1..β_K, β) divided by T."""
        return tuple(b / self.T for b in self.beta_stars) + (self.beta_triangle / self.T,)

    def with_theta(self, theta: Sequence[float]) -> "MarkovParams":
        """Parameters at T = 1 with (β_1..β_K, β) taken from theta."""
        if len(theta) != self.K + 1:
            raise ConfigurationError(f"theta needs {self.K + 1} entries, got {len(theta)}")
        return replace(
            self,
            T=1.0,
            beta_stars=tuple(float(t) for t in theta[:-1]),
            beta_triangle=float(theta[-1]),
        )

    def validate_for(self, graph: Graph) -> None:
        """Check K against the host: K may not exceed the host's maximum degree."""
        if self.K > graph.max_degree():
            raise ConfigurationError(
                f"star order cap K={self.K} exceeds the host's maximum degree "
                f"{graph.max_degree()}"
            )

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "T": self.T,
            "beta_triangle": self.beta_triangle,
            "beta_stars": list(self.beta_stars),
        }
        if self.edge_triangle:
            data["model"] = "edge_triangle"
        if self.star_bound != StarBound.SUBGRAPH_MAX_DEGREE:
            data["star_bound"] = self.star_bound.value
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MarkovParams":
        return cls(
            T=data.get("T", 1.0),
            beta_triangle=data.get("beta_triangle", 0.0),
            beta_stars=tuple(data.get("beta_stars", (0.0,))),
            edge_triangle=data.get("model") == "edge_triangle",
            star_bound=StarBound(data.get("star_bound", StarBound.SUBGRAPH_MAX_DEGREE)),
        )
