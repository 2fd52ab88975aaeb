"""Dimensionless scaling of the Schrödinger–Newton equation."""

from dataclasses import dataclass
from typing import Dict

from ..particle import ParticleSpec
from .constants import UnitSystem


@dataclass(frozen=True)
class ScaleFactors:
    """
    Length, time and energy scales of the single-particle Schrödinger–Newton equation.

    With x = L*·x̃, t = T*·t̃ and ψ = L*^(-3/2)·ψ̃ the equation reads
    i ∂ψ̃/∂t̃ = −½∇̃²ψ̃ − ∫|ψ̃(x̃′)|²/|x̃ − x̃′| d³x̃′ ψ̃, all coefficients unity.
    """

    length: float
    time: float
    energy: float

    def to_dimensionless_length(self, x: float) -> float:
        return x / self.length

    def from_dimensionless_length(self, x: float) -> float:
        return x * self.length

    def to_dimensionless_time(self, t: float) -> float:
        return t / self.time

    def from_dimensionless_time(self, t: float) -> float:
        return t * self.time

    def to_dimensionless_energy(self, e: float) -> float:
        return e / self.energy

    def from_dimensionless_energy(self, e: float) -> float:
        return e * self.energy

    def to_dict(self) -> Dict[str, float]:
        return {"length": self.length, "time": self.time, "energy": self.energy}


def sn_dimensionless_scale(spec: ParticleSpec, units: UnitSystem) -> ScaleFactors:
    """
    Scales L* = ħ²/(Gm³), E* = G²m⁵/ħ², T* = ħ³/(G²m⁵).

    Only the mass enters; ParticleSpec guarantees it is positive.
    """
    hbar, G, m = units.hbar, units.G, spec.mass
    length = hbar**2 / (G * m**3)
    energy = G**2 * m**5 / hbar**2
    time = hbar**3 / (G**2 * m**5)
    return ScaleFactors(length=length, time=time, energy=energy)
