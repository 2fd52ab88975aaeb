"""Physical constants, unit presets and dimensionless scaling."""

from .constants import (
    PhysicalConstants,
    PlanckUnits,
    PrefactorMode,
    UnitKind,
    UnitSystem,
    make_units,
    parse_mode,
    planck_units,
)
from .scaling import ScaleFactors, sn_dimensionless_scale

__all__ = [
    "PhysicalConstants",
    "PlanckUnits",
    "PrefactorMode",
    "UnitKind",
    "UnitSystem",
    "make_units",
    "parse_mode",
    "planck_units",
    "ScaleFactors",
    "sn_dimensionless_scale",
]
