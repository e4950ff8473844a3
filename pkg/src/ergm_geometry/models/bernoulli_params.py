from dataclasses import dataclass
from typing import Any, Dict, Tuple

from ergm_geometry.core.errors import ConfigurationError


@dataclass(frozen=True)
class BernoulliParams:
    """Independent per-edge inclusion probabilities p_e in [0, 1]."""

    p: Tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", tuple(float(x) for x in self.p))
        for i, x in enumerate(self.p):
            if not 0.0 <= x <= 1.0:
                raise ConfigurationError(f"p[{i}] = {x} is outside [0, 1]")

    @property
    def m(self) -> int:
        return len(self.p)

    @property
    def is_positive(self) -> bool:
        """True when every subset gets positive probability (all p_e in (0, 1))."""
        return all(0.0 < x < 1.0 for x in self.p)

    def to_dict(self) -> Dict[str, Any]:
        return {"p": list(self.p)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BernoulliParams":
        return cls(p=tuple(data["p"]))
