"""
Physical constants and the two supported unit systems.

SI values are CODATA 2018. The natural test system sets hbar = G = kB = 1
and keeps c explicit; c only enters the relativistic Unruh comparison and
the Planck-unit provenance values, never the non-relativistic physics.
"""

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Dict, Union

from ..errors import ValidationError
from ..utils.validation import require_positive

# CODATA 2018
HBAR_SI = 1.054571817e-34  # J s
G_SI = 6.67430e-11  # m^3 kg^-1 s^-2
KB_SI = 1.380649e-23  # J K^-1
C_SI = 299792458.0  # m s^-1, exact


class UnitKind(str, Enum):
    """Supported unit presets."""

    SI = "si"
    NATURAL_TEST = "natural"


class PrefactorMode(str, Enum):
    """Whether O(1) prefactors are dropped (paper) or kept (exact)."""

    PAPER = "paper"
    EXACT = "exact"


@dataclass(frozen=True)
class PhysicalConstants:
    """Immutable set of the four constants every formula draws from."""

    hbar: float
    G: float
    kB: float
    c: float

    def __post_init__(self) -> None:
        for name in ("hbar", "G", "kB", "c"):
            object.__setattr__(self, name, require_positive(getattr(self, name), name))

    def to_dict(self) -> Dict[str, float]:
        """Convert to a dictionary for serialization."""
        return {"hbar": self.hbar, "G": self.G, "kB": self.kB, "c": self.c}


@dataclass(frozen=True)
class UnitSystem:
    """A unit preset together with its constants."""

    kind: UnitKind
    constants: PhysicalConstants

    def __post_init__(self) -> None:
        if self.kind is UnitKind.NATURAL_TEST:
            k = self.constants
            if (k.hbar, k.G, k.kB) != (1.0, 1.0, 1.0):
                raise ValidationError("natural test units require hbar = G = kB = 1")

    @property
    def hbar(self) -> float:
        return self.constants.hbar

    @property
    def G(self) -> float:
        return self.constants.G

    @property
    def kB(self) -> float:
        return self.constants.kB

    @property
    def c(self) -> float:
        return self.constants.c

    def with_c(self, c: float) -> "UnitSystem":
        """Copy with a different speed of light (used for c-trend checks)."""
        return replace(self, constants=replace(self.constants, c=c))

    def to_dict(self) -> Dict[str, object]:
        """Convert to a dictionary for serialization."""
        return {"kind": self.kind.value, **self.constants.to_dict()}


_PRESETS = {
    UnitKind.SI: PhysicalConstants(hbar=HBAR_SI, G=G_SI, kB=KB_SI, c=C_SI),
    UnitKind.NATURAL_TEST: PhysicalConstants(hbar=1.0, G=1.0, kB=1.0, c=1.0),
}


def make_units(kind: Union[UnitKind, str]) -> UnitSystem:
    """
    Build one of the two unit presets.

    Args:
        kind: UnitKind member or its string value ("si" or "natural")

    Returns:
        Fully populated UnitSystem

    Raises:
        ValidationError: If ``kind`` names no preset
    """
    try:
        unit_kind = UnitKind(kind)
    except ValueError as e:
        raise ValidationError(f"unknown unit system: {kind!r}") from e
    return UnitSystem(kind=unit_kind, constants=_PRESETS[unit_kind])


def parse_mode(mode: Union[PrefactorMode, str]) -> PrefactorMode:
    """Coerce a string or enum into a PrefactorMode."""
    try:
        return PrefactorMode(mode)
    except ValueError as e:
        raise ValidationError(f"unknown prefactor mode: {mode!r}") from e


@dataclass(frozen=True)
class PlanckUnits:
    """Planck mass, length, time and temperature of a unit system."""

    mass: float
    length: float
    time: float
    temperature: float

    def to_dict(self) -> Dict[str, float]:
        return {
            "mass": self.mass,
            "length": self.length,
            "time": self.time,
            "temperature": self.temperature,
        }


def planck_units(units: UnitSystem) -> PlanckUnits:
    """Planck scales built from hbar, G, c and kB."""
    hbar, G, c, kB = units.hbar, units.G, units.c, units.kB
    mass = math.sqrt(hbar * c / G)
    return PlanckUnits(
        mass=mass,
        length=math.sqrt(hbar * G / c**3),
        time=math.sqrt(hbar * G / c**5),
        temperature=mass * c**2 / kB,
    )
