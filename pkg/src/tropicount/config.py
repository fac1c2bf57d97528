"""Run configuration."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class RealizeConfig:
    """Stretched point configuration: q_j = spacing**j * (1, eta, eta**2)."""
    eta: Fraction = Fraction(1, 64)
    spacing: int = 8

    def __post_init__(self):
        object.__setattr__(self, "eta", Fraction(self.eta))
        if not 0 < self.eta < 1:
            raise ValueError(f"eta must lie in (0, 1), got {self.eta}")
        if self.spacing <= 1:
            raise ValueError(f"spacing must exceed 1, got {self.spacing}")


@dataclass(frozen=True)
class CensusConfig:
    delta: int = 2
    degree: int = 3
    golden: bool = True
    realize: RealizeConfig = field(default_factory=RealizeConfig)
