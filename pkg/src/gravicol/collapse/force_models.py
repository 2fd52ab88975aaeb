"""Radial force models driving Bohmian trajectories."""

from abc import ABC, abstractmethod
from enum import Enum
from typing import Dict, Optional

from ..ensemble.averages import averaged_forces
from ..ensemble.quadrature import QuadratureSpec
from ..packet.potentials import grav_force, quantum_force
from ..particle import ParticleSpec
from ..units.constants import PrefactorMode, UnitSystem, parse_mode


class ForceSelection(str, Enum):
    """Which force terms act on the trajectory."""

    GRAV_ONLY = "grav"
    QUANTUM_ONLY = "quantum"
    BOTH = "both"

    @property
    def quantum(self) -> bool:
        return self is not ForceSelection.GRAV_ONLY

    @property
    def gravity(self) -> bool:
        return self is not ForceSelection.QUANTUM_ONLY


class FieldModel(str, Enum):
    """LOCAL uses the r-dependent forces; MEAN freezes them at their ensemble averages."""

    LOCAL = "local"
    MEAN = "mean"


class ForceModel(ABC):
    """Abstract base class for radial acceleration models."""

    def __init__(self, spec: ParticleSpec, units: UnitSystem, selection: ForceSelection):
        """
        Initialize force model.

        Args:
            spec: Particle whose frozen σ₀ fields are used
            units: Unit system
            selection: Force terms to include
        """
        self.spec = spec
        self.units = units
        self.selection = ForceSelection(selection)

    @abstractmethod
    def acceleration(self, r: float) -> float:
        """
        Radial acceleration at radius r (outward positive).

        Args:
            r: Radius, r >= 0

        Returns:
            Acceleration in the unit system's units
        """

    def describe(self) -> Dict[str, str]:
        return {"selection": self.selection.value}


class LocalForceModel(ForceModel):
    """f_q(r)/m + f_g(r)/m from the closed-form short-time fields."""

    def acceleration(self, r: float) -> float:
        total = 0.0
        if self.selection.quantum:
            total += quantum_force(self.spec, r, self.units)
        if self.selection.gravity:
            total += grav_force(self.spec, r, self.units)
        return total / self.spec.mass

    def describe(self) -> Dict[str, str]:
        return {"selection": self.selection.value, "field_model": FieldModel.LOCAL.value}


class MeanForceModel(ForceModel):
    """
    Constant accelerations: +ā_q outward and −ḡ inward.

    EXACT mode takes both from quadrature. PAPER mode uses the order-of-magnitude
    values ħ²/(m²σ₀³) and Gm/σ₀² with the O(1) prefactors dropped.
    """

    def __init__(
        self,
        spec: ParticleSpec,
        units: UnitSystem,
        selection: ForceSelection,
        mode: PrefactorMode = PrefactorMode.EXACT,
        qspec: Optional[QuadratureSpec] = None,
    ):
        super().__init__(spec, units, selection)
        self.mode = parse_mode(mode)
        if self.mode is PrefactorMode.EXACT:
            averages = averaged_forces(spec, units, qspec)
            self.quantum_accel = averages.mean_quantum_accel
            self.grav_accel = averages.mean_grav_accel
        else:
            self.quantum_accel = units.hbar**2 / (spec.mass**2 * spec.sigma0**3)
            self.grav_accel = units.G * spec.mass / spec.sigma0**2

    def acceleration(self, r: float) -> float:
        total = 0.0
        if self.selection.quantum:
            total += self.quantum_accel
        if self.selection.gravity:
            total -= self.grav_accel
        return total

    def describe(self) -> Dict[str, str]:
        return {
            "selection": self.selection.value,
            "field_model": FieldModel.MEAN.value,
            "mode": self.mode.value,
        }


def make_force_model(
    spec: ParticleSpec,
    units: UnitSystem,
    selection: ForceSelection,
    field_model: FieldModel = FieldModel.LOCAL,
    mode: PrefactorMode = PrefactorMode.EXACT,
    qspec: Optional[QuadratureSpec] = None,
) -> ForceModel:
    """Factory mirroring the CLI's --field/--forces choices."""
    if FieldModel(field_model) is FieldModel.MEAN:
        return MeanForceModel(spec, units, selection, mode, qspec)
    return LocalForceModel(spec, units, selection)
