from dataclasses import dataclass
from typing import Iterable, Tuple

from ergm_geometry.core.errors import GraphError


@dataclass(frozen=True)
class EdgeSubset:
    """A subset S of a host graph's edges, stored as a bit mask over edge indices.

    Bit i is set when edge i belongs to S. Two subsets are equal when their masks are.
    """

    mask: int = 0

    def __post_init__(self) -> None:
        if self.mask < 0:
            raise GraphError(f"edge subset mask must be nonnegative, got {self.mask}")

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "EdgeSubset":
        mask = 0
        for i in indices:
            if i < 0:
                raise GraphError(f"negative edge index {i}")
            mask |= 1 << i
        return cls(mask)

    @classmethod
    def full(cls, m: int) -> "EdgeSubset":
        return cls((1 << m) - 1)

    def indices(self) -> Tuple[int, ...]:
        out = []
        mask, i = self.mask, 0
        while mask:
            if mask & 1:
                out.append(i)
            mask >>= 1
            i += 1
        return tuple(out)

    def contains(self, index: int) -> bool:
        return bool((self.mask >> index) & 1)

    def toggled(self, index: int) -> "EdgeSubset":
        return EdgeSubset(self.mask ^ (1 << index))

    def with_edge(self, index: int) -> "EdgeSubset":
        return EdgeSubset(self.mask | (1 << index))

    def without_edge(self, index: int) -> "EdgeSubset":
        return EdgeSubset(self.mask & ~(1 << index))

    @property
    def size(self) -> int:
        return bin(self.mask).count("1")

    def check_for(self, m: int) -> None:
        """Raise GraphError if a bit at index >= m is set."""
        if self.mask >> m:
            raise GraphError(f"edge subset {self.indices()} not valid for m={m}")

    def __repr__(self) -> str:
        return f"EdgeSubset({set(self.indices()) or '{}'})"
