"""Reduction temperatures from the ensemble mean-square velocity, with Unruh and Hawking-order comparisons."""

import math
from dataclasses import dataclass, field
from typing import Dict, Optional

from ..ensemble.averages import enclosed_probability
from ..ensemble.quadrature import QuadratureSpec
from ..particle import ParticleSpec
from ..units.constants import PrefactorMode, UnitSystem, parse_mode
from ..utils.validation import require_non_negative, require_positive, require_positive_mass

# k_B T = m·ū² for the single radial degree of freedom
DEGREES_OF_FREEDOM = 1


@dataclass(frozen=True)
class TemperatureReport:
    """Reduction temperature next to its comparison values."""

    T_reduction: float
    T_unruh_nonrel: float
    T_unruh_rel: float
    T_unruh_footnote: float
    T_hawking_order: float
    mode: PrefactorMode
    assumptions: Dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, object]:
        return {
            "T_reduction": self.T_reduction,
            "T_unruh_nonrel": self.T_unruh_nonrel,
            "T_unruh_rel": self.T_unruh_rel,
            "T_unruh_footnote": self.T_unruh_footnote,
            "T_hawking_order": self.T_hawking_order,
            "mode": self.mode.value,
            "assumptions": dict(self.assumptions),
        }


def ensemble_temperature(
    mass: float,
    g: float,
    sigma0: float,
    units: UnitSystem,
    mode: PrefactorMode = PrefactorMode.PAPER,
    qspec: Optional[QuadratureSpec] = None,
) -> float:
    """
    T = m·ū²/k_B with ū² = 2|g|σ₀.

    Exact mode weights ū² by the probability inside σ₀; g = 0 gives 0.
    """
    mass = require_positive_mass(mass)
    sigma0 = require_positive(sigma0, "sigma0")
    g = require_non_negative(g, "g")
    u2 = 2.0 * g * sigma0
    if parse_mode(mode) is PrefactorMode.EXACT:
        u2 *= enclosed_probability(ParticleSpec(mass, sigma0), sigma0, qspec)
    return mass * u2 / (DEGREES_OF_FREEDOM * units.kB)


def reduction_temperature_compton(
    mass: float,
    g: float,
    units: UnitSystem,
    mode: PrefactorMode = PrefactorMode.PAPER,
) -> float:
    """
    Reduction temperature with σ₀ at the reduced Compton wavelength ħ/m.

    Paper mode ħ|g|/k_B; exact mode keeps the factor 2, i.e. the paper-mode
    ensemble temperature at σ₀ = ħ/m.
    """
    mass = require_positive_mass(mass)
    g = require_positive(g, "g")
    if parse_mode(mode) is PrefactorMode.EXACT:
        return ensemble_temperature(mass, g, units.hbar / mass, units, PrefactorMode.PAPER)
    return units.hbar * g / units.kB


def unruh_temperature(g: float, units: UnitSystem) -> float:
    """Relativistic Unruh temperature ħ|g|/(2πc·k_B)."""
    return units.hbar * g / (2.0 * math.pi * units.c * units.kB)


def unruh_footnote_temperature(g: float, units: UnitSystem) -> float:
    """The c-carrying variant ħ|g|/(k_B c)."""
    return units.hbar * g / (units.kB * units.c)


def reduction_temperature_schwarzschild(
    mass: float,
    units: UnitSystem,
    mode: PrefactorMode = PrefactorMode.PAPER,
) -> float:
    """
    Temperature with σ₀ = 2Gm and |g| = Gm/σ₀².

    Paper mode ħ/(k_B G m). Exact mode evaluates ħ|g|/k_B on those
    substitutions without rounding, ħ/(4k_B G m).
    """
    mass = require_positive_mass(mass)
    if parse_mode(mode) is PrefactorMode.EXACT:
        sigma0 = 2.0 * units.G * mass
        g = units.G * mass / sigma0**2
        return units.hbar * g / units.kB
    return units.hbar / (units.kB * units.G * mass)


def schwarzschild_provenance(mass: float, units: UnitSystem) -> Dict[str, float]:
    """Intermediate values of the σ₀ = 2Gm substitution chain."""
    mass = require_positive_mass(mass)
    sigma0 = 2.0 * units.G * mass
    g = units.G * mass / sigma0**2
    return {
        "sigma0": sigma0,
        "g": g,
        "T_paper": reduction_temperature_schwarzschild(mass, units, PrefactorMode.PAPER),
        "T_exact": reduction_temperature_schwarzschild(mass, units, PrefactorMode.EXACT),
    }


def temperature_report(
    mass: float,
    g: float,
    units: UnitSystem,
    mode: PrefactorMode = PrefactorMode.PAPER,
) -> TemperatureReport:
    """All temperatures at field ``g`` under the Compton-width assumption."""
    mode = parse_mode(mode)
    return TemperatureReport(
        T_reduction=reduction_temperature_compton(mass, g, units, mode),
        T_unruh_nonrel=units.hbar * g / units.kB,
        T_unruh_rel=unruh_temperature(g, units),
        T_unruh_footnote=unruh_footnote_temperature(g, units),
        T_hawking_order=reduction_temperature_schwarzschild(mass, units, mode),
        mode=mode,
        assumptions={
            "T_reduction": "sigma0 = hbar/m (reduced Compton wavelength)",
            "T_hawking_order": "sigma0 = 2 G m, |g| = G m / sigma0^2",
            "degrees_of_freedom": str(DEGREES_OF_FREEDOM),
        },
    )
