"""
Ensemble averages over the spherical Gaussian density.

All integrals run in the dimensionless radius x = r/σ₀ with forces divided by
their natural scale, so the tolerances in QuadratureSpec are unit-free.
"""

import math
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from scipy import special

from ..particle import ParticleSpec
from ..packet.potentials import (
    SQRT_2_OVER_PI,
    grav_force,
    grav_force_scale,
    quantum_force,
    quantum_force_scale,
)
from ..units.constants import PrefactorMode, UnitSystem, parse_mode
from ..utils.logging import get_logger
from ..utils.validation import require_non_negative, require_radius
from .quadrature import QuadratureSpec, integrate_interval, integrate_radial

logger = get_logger(__name__)

# (2π)^(−3/2)·4π, the shell weight of the unit-width density
_SHELL_WEIGHT = SQRT_2_OVER_PI


def _shell_density(x: float) -> float:
    """4πx²ρ(x) for σ₀ = 1."""
    return _SHELL_WEIGHT * x * x * math.exp(-0.5 * x * x)


def enclosed_probability_closed_form(x: float) -> float:
    """erf(x/√2) − √(2/π)·x·e^(−x²/2), the mass inside radius xσ₀."""
    return float(special.erf(x / math.sqrt(2.0))) - SQRT_2_OVER_PI * x * math.exp(-0.5 * x * x)


# Mass inside one width, ≈ 0.198748
ENCLOSED_AT_SIGMA0 = enclosed_probability_closed_form(1.0)


@dataclass(frozen=True)
class AveragedForces:
    """Quadrature averages of the force magnitudes per unit mass, with closed forms."""

    mean_quantum_accel: float
    mean_grav_accel: float
    closed_form_quantum: float
    closed_form_grav: float
    quantum_error: float = 0.0
    grav_error: float = 0.0

    @property
    def ratio(self) -> float:
        """Quantum over gravitational mean acceleration (quadrature values)."""
        return self.mean_quantum_accel / self.mean_grav_accel

    def to_dict(self) -> Dict[str, float]:
        return {
            "mean_quantum_accel": self.mean_quantum_accel,
            "mean_grav_accel": self.mean_grav_accel,
            "closed_form_quantum": self.closed_form_quantum,
            "closed_form_grav": self.closed_form_grav,
            "ratio": self.ratio,
        }


@dataclass(frozen=True)
class FieldEstimates:
    """Self-field magnitudes at the scales used in the order-of-magnitude arguments."""

    order_of_magnitude: float
    ensemble_mean: float
    peak_local: float
    footnote_quoted: float

    def to_dict(self) -> Dict[str, float]:
        return {
            "order_of_magnitude": self.order_of_magnitude,
            "ensemble_mean": self.ensemble_mean,
            "peak_local": self.peak_local,
            "footnote_quoted": self.footnote_quoted,
        }


def _dimensionless_average(
    force: Callable[[float], float],
    qspec: Optional[QuadratureSpec],
    magnitude: bool = True,
) -> Tuple[float, float]:
    """∫4πx²ρ(x)·F(x)dx (or |F|) over the truncation domain; returns (value, error)."""
    if magnitude:
        result = integrate_radial(lambda x: _shell_density(x) * abs(force(x)), qspec)
    else:
        result = integrate_radial(lambda x: _shell_density(x) * force(x), qspec)
    value = result.unwrap(module=__name__, tolerance=(qspec or QuadratureSpec()).rel_tol)
    return value, result.error


def radial_moment(spec: ParticleSpec, k: float, qspec: Optional[QuadratureSpec] = None) -> float:
    """⟨r^k⟩ over the density; k = 0 is the normalization."""
    result = integrate_radial(lambda x: _shell_density(x) * x**k, qspec)
    value = result.unwrap(module=__name__)
    return value * spec.sigma0**k


def mean_radius_closed_form(spec: ParticleSpec) -> float:
    """⟨r⟩ = 2√(2/π)σ₀."""
    return 2.0 * SQRT_2_OVER_PI * spec.sigma0


def mean_quantum_acceleration_closed_form(spec: ParticleSpec, units: UnitSystem) -> float:
    """√(2/π)·ħ²/(2m²σ₀³)."""
    return SQRT_2_OVER_PI * units.hbar**2 / (2.0 * spec.mass**2 * spec.sigma0**3)


def mean_grav_acceleration_closed_form(spec: ParticleSpec, units: UnitSystem) -> float:
    """Gm/(πσ₀²)."""
    return units.G * spec.mass / (math.pi * spec.sigma0**2)


def _quantum_average(
    spec: ParticleSpec,
    units: UnitSystem,
    qspec: Optional[QuadratureSpec],
    magnitude: bool = True,
) -> Tuple[float, float]:
    scale = quantum_force_scale(spec, units)
    s0 = spec.sigma0
    value, error = _dimensionless_average(
        lambda x: quantum_force(spec, s0 * x, units) / scale, qspec, magnitude
    )
    factor = scale / spec.mass
    return value * factor, error * factor


def _grav_average(
    spec: ParticleSpec,
    units: UnitSystem,
    qspec: Optional[QuadratureSpec],
    magnitude: bool = True,
) -> Tuple[float, float]:
    scale = grav_force_scale(spec, units)
    s0 = spec.sigma0
    value, error = _dimensionless_average(
        lambda x: grav_force(spec, s0 * x, units) / scale, qspec, magnitude
    )
    factor = scale / spec.mass
    return value * factor, error * factor


def mean_quantum_acceleration(
    spec: ParticleSpec,
    units: UnitSystem,
    qspec: Optional[QuadratureSpec] = None,
) -> float:
    """(1/m)∫ρ|∇Q|dv by quadrature."""
    return _quantum_average(spec, units, qspec)[0]


def mean_grav_acceleration(
    spec: ParticleSpec,
    units: UnitSystem,
    qspec: Optional[QuadratureSpec] = None,
) -> float:
    """(1/m)∫ρ|∇U|dv by quadrature."""
    return _grav_average(spec, units, qspec)[0]


def signed_mean_accelerations(
    spec: ParticleSpec,
    units: UnitSystem,
    qspec: Optional[QuadratureSpec] = None,
) -> Tuple[float, float]:
    """(1/m)∫ρ f dv without magnitudes: (quantum, gravitational), signs kept."""
    return (
        _quantum_average(spec, units, qspec, magnitude=False)[0],
        _grav_average(spec, units, qspec, magnitude=False)[0],
    )


def averaged_forces(
    spec: ParticleSpec,
    units: UnitSystem,
    qspec: Optional[QuadratureSpec] = None,
) -> AveragedForces:
    """Both mean accelerations with their closed forms alongside."""
    quantum, quantum_error = _quantum_average(spec, units, qspec)
    grav, grav_error = _grav_average(spec, units, qspec)
    logger.debug(f"Averaged accelerations for m={spec.mass:g}, sigma0={spec.sigma0:g}")
    return AveragedForces(
        mean_quantum_accel=quantum,
        mean_grav_accel=grav,
        closed_form_quantum=mean_quantum_acceleration_closed_form(spec, units),
        closed_form_grav=mean_grav_acceleration_closed_form(spec, units),
        quantum_error=quantum_error,
        grav_error=grav_error,
    )


def enclosed_probability(
    spec: ParticleSpec,
    radius: float,
    qspec: Optional[QuadratureSpec] = None,
) -> float:
    """
    Probability inside ``radius`` by quadrature.

    Radii beyond the truncation radius integrate to the truncation radius,
    where the remaining tail mass is below double precision.
    """
    radius = require_radius(radius, "radius")
    qspec = qspec or QuadratureSpec()
    upper = min(radius / spec.sigma0, qspec.truncation_radius)
    if upper == 0.0:
        return 0.0
    result = integrate_interval(_shell_density, 0.0, upper, qspec)
    return result.unwrap(module=__name__, tolerance=qspec.rel_tol)


def mean_square_velocity(
    spec: ParticleSpec,
    g: float,
    tau: float,
    mode: PrefactorMode = PrefactorMode.PAPER,
    qspec: Optional[QuadratureSpec] = None,
) -> float:
    """
    Ensemble mean-square velocity ū² after falling for ``tau``.

    Paper mode: g²τ². Exact mode weights it by the probability inside σ₀.
    """
    tau = require_non_negative(tau, "tau")
    base = g * g * tau * tau
    if parse_mode(mode) is PrefactorMode.EXACT:
        return base * enclosed_probability(spec, spec.sigma0, qspec)
    return base


def field_estimates(spec: ParticleSpec, units: UnitSystem) -> FieldEstimates:
    """Self-field magnitudes in units of Gm/σ₀²: 1, 1/π, √(2/π)e^(−1/2), 2√(2/π)."""
    base = units.G * spec.mass / spec.sigma0**2
    return FieldEstimates(
        order_of_magnitude=base,
        ensemble_mean=base / math.pi,
        peak_local=base * SQRT_2_OVER_PI * math.exp(-0.5),
        footnote_quoted=base * 2.0 * SQRT_2_OVER_PI,
    )


def balance_ratio_closed_form(spec: ParticleSpec, units: UnitSystem) -> float:
    """Mean quantum over mean gravitational acceleration: (π/2)√(2/π)·ħ²/(Gm³σ₀)."""
    return (
        0.5 * math.pi * SQRT_2_OVER_PI * units.hbar**2
        / (units.G * spec.mass**3 * spec.sigma0)
    )
