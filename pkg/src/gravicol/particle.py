"""The two free physical inputs shared by every computation."""

from dataclasses import dataclass, replace
from typing import Dict

from .utils.validation import require_positive_length, require_positive_mass


@dataclass(frozen=True)
class ParticleSpec:
    """Particle mass and initial Gaussian packet width."""

    mass: float
    sigma0: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "mass", require_positive_mass(self.mass))
        object.__setattr__(self, "sigma0", require_positive_length(self.sigma0, "sigma0"))

    def with_mass(self, mass: float) -> "ParticleSpec":
        """Copy with a different mass."""
        return replace(self, mass=mass)

    def with_sigma0(self, sigma0: float) -> "ParticleSpec":
        """Copy with a different initial width."""
        return replace(self, sigma0=sigma0)

    def to_dict(self) -> Dict[str, float]:
        """Convert to a dictionary for serialization."""
        return {"mass": self.mass, "sigma0": self.sigma0}
