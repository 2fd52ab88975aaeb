"""
Quantum and self-gravitational potentials of the spherical Gaussian and their forces.

Short-time fields with σ = σ₀. Potentials are energies measured from r = 0;
forces are radial with outward positive, so gravity is attractive (negative).
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from scipy import special

from ..particle import ParticleSpec
from ..units.constants import UnitSystem
from ..utils.differences import central_difference, richardson_second_difference
from ..utils.validation import require_radius
from .wavepacket import radial_amplitude_even

SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)

# Finite-difference steps relative to σ₀
GRADIENT_STEP = 1e-5
LAPLACIAN_STEP = 1e-2


class FieldKind(str, Enum):
    QUANTUM_POTENTIAL = "quantum_potential"
    GRAV_POTENTIAL = "grav_potential"
    QUANTUM_FORCE = "quantum_force"
    GRAV_FORCE = "grav_force"


@dataclass(frozen=True)
class RadialField:
    """A radial scalar field bound to one particle."""

    kind: FieldKind
    value_at: Callable[[float], float]

    def __call__(self, r: float) -> float:
        return self.value_at(r)


def quantum_force_scale(spec: ParticleSpec, units: UnitSystem) -> float:
    """ħ²/(mσ₀³), the natural size of the quantum force."""
    return units.hbar**2 / (spec.mass * spec.sigma0**3)


def grav_force_scale(spec: ParticleSpec, units: UnitSystem) -> float:
    """Gm²/σ₀², the natural size of the self-gravitational force."""
    return units.G * spec.mass**2 / spec.sigma0**2


def quantum_potential(spec: ParticleSpec, r: float, units: UnitSystem) -> float:
    """Q(r) = ħ²(6σ₀² − r²)/(8mσ₀⁴)."""
    r = require_radius(r)
    s2 = spec.sigma0**2
    return units.hbar**2 * (6.0 * s2 - r * r) / (8.0 * spec.mass * s2 * s2)


def grav_potential(spec: ParticleSpec, r: float, units: UnitSystem) -> float:
    """
    U(r) − U(0) = √(2/π)(Gm²/σ₀)(1 − e^(−r²/2σ₀²)).

    Zero at the center and increasing outward, the profile of an attractive well.
    """
    r = require_radius(r)
    s0 = spec.sigma0
    return (
        SQRT_2_OVER_PI
        * units.G
        * spec.mass**2
        / s0
        * -math.expm1(-(r * r) / (2.0 * s0 * s0))
    )


def quantum_force(spec: ParticleSpec, r: float, units: UnitSystem) -> float:
    """f_q = −dQ/dr = ħ²r/(4mσ₀⁴), outward."""
    r = require_radius(r)
    return units.hbar**2 * r / (4.0 * spec.mass * spec.sigma0**4)


def grav_force(spec: ParticleSpec, r: float, units: UnitSystem) -> float:
    """f_g = −dU/dr = −√(2/π)·Gm²r·e^(−r²/2σ₀²)/σ₀³, inward."""
    r = require_radius(r)
    s0 = spec.sigma0
    return (
        -SQRT_2_OVER_PI
        * units.G
        * spec.mass**2
        * r
        * math.exp(-(r * r) / (2.0 * s0 * s0))
        / s0**3
    )


def mean_field_potential(spec: ParticleSpec, r: float, units: UnitSystem) -> float:
    """
    Newtonian potential energy of the particle in its own Gaussian mass cloud.

    −Gm²·erf(r/(√2σ₀))/r by the shell theorem; −√(2/π)Gm²/σ₀ at r = 0.
    """
    r = require_radius(r)
    s0 = spec.sigma0
    gm2 = units.G * spec.mass**2
    if r == 0.0:
        return -SQRT_2_OVER_PI * gm2 / s0
    return -gm2 * float(special.erf(r / (math.sqrt(2.0) * s0))) / r


def force_balance_radius(spec: ParticleSpec, units: UnitSystem) -> Optional[float]:
    """
    Radius where the local quantum and gravitational forces cancel.

    r*² = 2σ₀² ln(4√(2/π)·Gm³σ₀/ħ²); None when gravity never catches up.
    """
    ratio = 4.0 * SQRT_2_OVER_PI * units.G * spec.mass**3 * spec.sigma0 / units.hbar**2
    if ratio <= 1.0:
        return None
    return spec.sigma0 * math.sqrt(2.0 * math.log(ratio))


def field(spec: ParticleSpec, kind: FieldKind, units: UnitSystem) -> RadialField:
    """Bind one of the four closed forms to a particle."""
    funcs = {
        FieldKind.QUANTUM_POTENTIAL: quantum_potential,
        FieldKind.GRAV_POTENTIAL: grav_potential,
        FieldKind.QUANTUM_FORCE: quantum_force,
        FieldKind.GRAV_FORCE: grav_force,
    }
    func = funcs[FieldKind(kind)]
    return RadialField(kind=FieldKind(kind), value_at=lambda r: func(spec, r, units))


def quantum_potential_from_laplacian(spec: ParticleSpec, r: float, units: UnitSystem) -> float:
    """
    Q = −(ħ²/2m)·∇²R/R from finite differences of the amplitude.

    Uses the 3-D radial Laplacian R'' + 2R'/r (R''(0)·3 at the origin).
    """
    r = require_radius(r)
    s0 = spec.sigma0

    def amp(x: float) -> float:
        return radial_amplitude_even(s0, x)

    r_amp = amp(r)
    second = richardson_second_difference(amp, r, LAPLACIAN_STEP * s0)
    if r == 0.0:
        laplacian = 3.0 * second
    else:
        first = central_difference(amp, r, GRADIENT_STEP * s0)
        laplacian = second + 2.0 * first / r
    return -units.hbar**2 / (2.0 * spec.mass) * laplacian / r_amp


def force_from_potential(
    potential: Callable[[ParticleSpec, float, UnitSystem], float],
    spec: ParticleSpec,
    r: float,
    units: UnitSystem,
) -> float:
    """−dV/dr by central differences with step 1e-5·σ₀; requires r ≥ step."""
    h = GRADIENT_STEP * spec.sigma0
    return -central_difference(lambda x: potential(spec, x, units), r, h)
