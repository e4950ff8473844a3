from dataclasses import dataclass
from enum import Enum

from ergm_geometry.core.errors import GraphError


class MotifKind(str, Enum):
    """The subgraph motifs whose homomorphism densities enter the Gibbs exponent."""

    TRIANGLE = "triangle"
    KSTAR = "kstar"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Motif:
    """A triangle, or a k-star S_k (one center, k leaves)."""

    kind: MotifKind
    k: int = 0

    def __post_init__(self) -> None:
        if self.kind == MotifKind.KSTAR and self.k < 1:
            raise GraphError(f"k-star order must be >= 1, got {self.k}")

    @classmethod
    def triangle(cls) -> "Motif":
        return cls(MotifKind.TRIANGLE)

    @classmethod
    def kstar(cls, k: int) -> "Motif":
        return cls(MotifKind.KSTAR, k)

    @property
    def vertex_count(self) -> int:
        """|V(H)|: 3 for the triangle, k + 1 for S_k."""
        return 3 if self.kind == MotifKind.TRIANGLE else self.k + 1

    def __str__(self) -> str:
        return "triangle" if self.kind == MotifKind.TRIANGLE else f"kstar({self.k})"
