"""
Gaussian wave packet falling from rest in a homogeneous field.

The packet is kept in polar form (modulus, phase) so phase arithmetic in the
frame maps stays exact. Positions and fields are 3-vectors; a scalar is read
as a component along the z axis.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Union

import numpy as np

from ..errors import ValidationError
from ..particle import ParticleSpec
from ..units.constants import UnitSystem
from ..utils.differences import gradient
from ..utils.validation import require_radius

VectorLike = Union[float, np.ndarray, list, tuple]

# Relative finite-difference step for the phase-gradient oracle
PHASE_GRADIENT_STEP = 1e-6


class PhaseConvention(str, Enum):
    """Which gravity phase term the packet carries."""

    CONSISTENT = "consistent"
    PRINTED = "printed"


def as_vector(value: VectorLike) -> np.ndarray:
    """Coerce a scalar or sequence into a float 3-vector."""
    arr = np.asarray(value, dtype=float)
    if arr.ndim == 0:
        return np.array([0.0, 0.0, float(arr)])
    if arr.shape != (3,):
        raise ValidationError(f"expected a scalar or a 3-vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError("vector components must be finite")
    return arr


@dataclass(frozen=True)
class ComplexAmplitude:
    """Wave-function sample ψ = modulus · exp(i · phase)."""

    modulus: float
    phase: float

    def __post_init__(self) -> None:
        if not self.modulus >= 0:
            raise ValidationError(f"modulus must be >= 0, got {self.modulus!r}")

    def to_complex(self) -> complex:
        return self.modulus * complex(math.cos(self.phase), math.sin(self.phase))

    def shifted(self, delta_phase: float) -> "ComplexAmplitude":
        """Multiply by exp(i · delta_phase)."""
        return ComplexAmplitude(self.modulus, self.phase + delta_phase)


@dataclass(frozen=True)
class PacketState:
    """Packet at time t; build it with :func:`packet_state` so sigma_t is consistent."""

    spec: ParticleSpec
    t: float
    g: np.ndarray
    sigma_t: float
    units: UnitSystem

    @property
    def spreading(self) -> float:
        """Dimensionless spreading parameter ħt/(2mσ₀²)."""
        return spreading_parameter(self.spec, self.t, self.units)

    @property
    def center(self) -> np.ndarray:
        """Packet center −½gt²."""
        return -0.5 * self.g * self.t**2

    def to_dict(self) -> Dict[str, object]:
        return {
            "mass": self.spec.mass,
            "sigma0": self.spec.sigma0,
            "t": self.t,
            "g": [float(c) for c in self.g],
            "sigma_t": self.sigma_t,
        }


def spreading_parameter(spec: ParticleSpec, t: float, units: UnitSystem) -> float:
    return units.hbar * t / (2.0 * spec.mass * spec.sigma0**2)


def spreading_time(spec: ParticleSpec, units: UnitSystem) -> float:
    """Natural spreading time 2mσ₀²/ħ."""
    return 2.0 * spec.mass * spec.sigma0**2 / units.hbar


def width_at(spec: ParticleSpec, t: float, units: UnitSystem) -> float:
    """Width σ(t) = σ₀·sqrt(1 + ħ²t²/(4m²σ₀⁴)); even in t."""
    if not math.isfinite(t):
        raise ValidationError(f"t must be finite, got {t!r}")
    return spec.sigma0 * math.hypot(1.0, spreading_parameter(spec, t, units))


def packet_state(
    spec: ParticleSpec,
    t: float,
    g: VectorLike,
    units: UnitSystem,
) -> PacketState:
    """Build the packet at time ``t`` in field ``g``."""
    return PacketState(
        spec=spec,
        t=float(t),
        g=as_vector(g),
        sigma_t=width_at(spec, t, units),
        units=units,
    )


def amplitude(state: PacketState, x: VectorLike) -> float:
    """Real amplitude R = (2πσ²)^(−3/4) exp(−|x + ½gt²|²/(4σ²))."""
    xi = as_vector(x) - state.center
    sigma = state.sigma_t
    return (2.0 * math.pi * sigma**2) ** -0.75 * math.exp(-float(xi @ xi) / (4.0 * sigma**2))


def density_spherical(spec: ParticleSpec, r: float) -> float:
    """Short-time probability density ρ(r) = (2πσ₀²)^(−3/2) e^(−r²/2σ₀²)."""
    r = require_radius(r)
    return _density_even(spec.sigma0, r)


def _density_even(sigma0: float, r: float) -> float:
    # No sign check; the finite-difference oracles sample slightly negative r.
    return (2.0 * math.pi * sigma0**2) ** -1.5 * math.exp(-(r * r) / (2.0 * sigma0**2))


def radial_amplitude_even(sigma0: float, r: float) -> float:
    """R(r) = (2πσ₀²)^(−3/4) e^(−r²/4σ₀²), defined for any real r."""
    return (2.0 * math.pi * sigma0**2) ** -0.75 * math.exp(-(r * r) / (4.0 * sigma0**2))


def phase(
    state: PacketState,
    x: VectorLike,
    convention: PhaseConvention = PhaseConvention.CONSISTENT,
) -> float:
    """
    Phase S/ħ of the falling packet.

    CONSISTENT: ξ²τ/(4σ²) − (3/2)·atan τ − (m/ħ)(g·x t + g²t³/6), ξ = x + ½gt².
    PRINTED: the same free-spreading part plus (m/ħ)(x² − g·x t − m g² t³/6),
    the gravity term exactly as it is usually quoted; it is not a solution and
    is kept only to expose the mismatch.
    """
    x = as_vector(x)
    xi = x - state.center
    tau = state.spreading
    m_over_hbar = state.spec.mass / state.units.hbar
    t = state.t
    g = state.g
    g_dot_x = float(g @ x)
    g_sq = float(g @ g)
    free = float(xi @ xi) * tau / (4.0 * state.sigma_t**2) - 1.5 * math.atan(tau)
    if PhaseConvention(convention) is PhaseConvention.PRINTED:
        gravity = m_over_hbar * (
            float(x @ x) - g_dot_x * t - state.spec.mass * g_sq * t**3 / 6.0
        )
    else:
        gravity = -m_over_hbar * (g_dot_x * t + g_sq * t**3 / 6.0)
    return free + gravity


def wavefunction(
    state: PacketState,
    x: VectorLike,
    convention: PhaseConvention = PhaseConvention.CONSISTENT,
) -> ComplexAmplitude:
    """Full packet sample in polar form."""
    return ComplexAmplitude(modulus=amplitude(state, x), phase=phase(state, x, convention))


def guidance_velocity(state: PacketState, x: VectorLike) -> np.ndarray:
    """
    Bohmian velocity v = ∇S/m of the consistent phase.

    v = ξ·(dσ/dt)/σ − g t; zero everywhere at t = 0 and −g t at the center.
    """
    xi = as_vector(x) - state.center
    hbar, m, s0 = state.units.hbar, state.spec.mass, state.spec.sigma0
    tau = state.spreading
    dilation_rate = tau * hbar / (2.0 * m * s0**2) / (1.0 + tau**2)
    return xi * dilation_rate - state.g * state.t


def guidance_velocity_numeric(
    state: PacketState,
    x: VectorLike,
    convention: PhaseConvention = PhaseConvention.CONSISTENT,
    rel_step: float = PHASE_GRADIENT_STEP,
) -> np.ndarray:
    """(ħ/m)∇(S/ħ) by central differences of :func:`phase` with step rel_step·σ₀."""
    h = rel_step * state.spec.sigma0
    grad = gradient(lambda p: phase(state, p, convention), as_vector(x), h)
    return state.units.hbar / state.spec.mass * grad


def bohmian_acceleration(
    spec: ParticleSpec,
    x0: VectorLike,
    g: VectorLike,
    t: float,
    units: UnitSystem,
) -> np.ndarray:
    """
    Acceleration of the trajectory started at x0: −g + ħ²x₀/(4m²σ₀σ(t)³).

    The second term depends on m, so the motion is not universal.
    """
    sigma = width_at(spec, t, units)
    x0 = as_vector(x0)
    quantum = units.hbar**2 / (4.0 * spec.mass**2 * spec.sigma0 * sigma**3)
    return -as_vector(g) + quantum * x0
