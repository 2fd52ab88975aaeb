"""
Freely-falling versus static observers: coordinates, phases and energies.

The accelerated frame is x′ = x − ½gt², t′ = t. Wave functions are mapped as
phase shifts on ComplexAmplitude samples; the cubic coefficient of the
accelerated-frame map is derived from the inertial one (½ − 1/6 = 1/3) so the
two maps compose to the identity.
"""

import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from ..packet.wavepacket import ComplexAmplitude, VectorLike, as_vector
from ..units.constants import UnitSystem
from ..utils.differences import central_difference
from ..utils.validation import require_positive, require_positive_mass

# Cubic phase coefficient of the inertial-frame map
INERTIAL_CUBIC = 1.0 / 6.0
# ½ from x = x′ + ½gt² minus the inertial 1/6
ACCELERATED_CUBIC = 0.5 - INERTIAL_CUBIC


@dataclass(frozen=True)
class FrameTransform:
    """Change to the frame falling with acceleration g."""

    g: np.ndarray
    t: float

    def forward(self, x: VectorLike) -> Tuple[np.ndarray, float]:
        """(x, t) → (x − ½gt², t)."""
        return as_vector(x) - 0.5 * self.g * self.t**2, self.t

    def inverse(self, x_prime: VectorLike) -> Tuple[np.ndarray, float]:
        """(x′, t′) → (x′ + ½gt′², t′)."""
        return as_vector(x_prime) + 0.5 * self.g * self.t**2, self.t


@dataclass(frozen=True)
class PhaseDecomposition:
    """Newtonian phase S′ = S + linear_term + cubic_term (actions)."""

    einsteinian_phase: float
    newtonian_phase: float
    linear_term: float
    cubic_term: float

    def to_dict(self) -> Dict[str, float]:
        return {
            "einsteinian_phase": self.einsteinian_phase,
            "newtonian_phase": self.newtonian_phase,
            "linear_term": self.linear_term,
            "cubic_term": self.cubic_term,
        }


@dataclass(frozen=True)
class EnergyPair:
    """Einsteinian and Newtonian energies with their difference ℰ = E′ − E."""

    E: float
    E_prime: float
    difference: float
    E_prime_numeric: Optional[float] = None

    def to_dict(self) -> Dict[str, Optional[float]]:
        return {
            "E": self.E,
            "E_prime": self.E_prime,
            "difference": self.difference,
            "E_prime_numeric": self.E_prime_numeric,
        }


def to_accelerated_frame(x: VectorLike, t: float, g: VectorLike) -> Tuple[np.ndarray, float]:
    return FrameTransform(g=as_vector(g), t=float(t)).forward(x)


def from_accelerated_frame(x_prime: VectorLike, t_prime: float, g: VectorLike) -> Tuple[np.ndarray, float]:
    return FrameTransform(g=as_vector(g), t=float(t_prime)).inverse(x_prime)


def _phase_terms(x_prime: np.ndarray, t_prime: float, mass: float, g: np.ndarray) -> Tuple[float, float]:
    linear = -mass * float(g @ x_prime) * t_prime
    cubic = mass * float(g @ g) * t_prime**3 / 3.0
    return linear, cubic


def newtonian_phase(
    S: float,
    x_prime: VectorLike,
    t_prime: float,
    mass: float,
    g: VectorLike,
) -> PhaseDecomposition:
    """S′ = S − m g·x′t′ + (1/3)m g²t′³ with both gravity terms kept separately."""
    mass = require_positive_mass(mass)
    linear, cubic = _phase_terms(as_vector(x_prime), t_prime, mass, as_vector(g))
    return PhaseDecomposition(
        einsteinian_phase=S,
        newtonian_phase=S + linear + cubic,
        linear_term=linear,
        cubic_term=cubic,
    )


def einsteinian_phase(
    S_prime: float,
    x_prime: VectorLike,
    t_prime: float,
    mass: float,
    g: VectorLike,
) -> float:
    """Inverse of :func:`newtonian_phase`."""
    mass = require_positive_mass(mass)
    linear, cubic = _phase_terms(as_vector(x_prime), t_prime, mass, as_vector(g))
    return S_prime - linear - cubic


def einsteinian_from_newtonian(
    psi: ComplexAmplitude,
    x: VectorLike,
    t: float,
    mass: float,
    g: VectorLike,
    units: UnitSystem,
) -> ComplexAmplitude:
    """φ(x′, t′) = exp(i(m/ħ)(g²t³/6 − x·g t))·ψ(x, t)."""
    g = as_vector(g)
    shift = mass / units.hbar * (INERTIAL_CUBIC * float(g @ g) * t**3 - float(as_vector(x) @ g) * t)
    return psi.shifted(shift)


def newtonian_from_einsteinian(
    phi: ComplexAmplitude,
    x_prime: VectorLike,
    t_prime: float,
    mass: float,
    g: VectorLike,
    units: UnitSystem,
) -> ComplexAmplitude:
    """ψ(x, t) = exp(i(m/ħ)(g²t′³/3 + x′·g t′))·φ(x′, t′)."""
    g = as_vector(g)
    shift = mass / units.hbar * (
        ACCELERATED_CUBIC * float(g @ g) * t_prime**3 + float(as_vector(x_prime) @ g) * t_prime
    )
    return phi.shifted(shift)


def energy_difference(mass: float, g: VectorLike, t: float) -> float:
    """ℰ = −(3/2)m g² t² on the falling path."""
    g = as_vector(g)
    return -1.5 * mass * float(g @ g) * t * t


def energy_pair(
    S_time_derivative: float,
    mass: float,
    g: VectorLike,
    t: float,
    x_prime: Optional[VectorLike] = None,
    rel_step: float = 1e-4,
) -> EnergyPair:
    """
    Energies seen by the two observers at time t.

    The Einsteinian energy is E = −∂S/∂t. The closed form differentiates
    S′(x′, t) at fixed x′: E′ = E + m g·x′ − m g²t², evaluated on the falling
    path x′ = −½gt² unless ``x_prime`` is given. The numeric member repeats the
    partial derivative by central differences of :func:`newtonian_phase`.

    Args:
        S_time_derivative: ∂S/∂t of the Einsteinian phase (constant over the step)
        mass: Particle mass
        g: Field vector
        t: Time
        x_prime: Fixed accelerated-frame position; None for the falling path
        rel_step: Difference step relative to |t| (absolute when t = 0)
    """
    mass = require_positive_mass(mass)
    g = as_vector(g)
    E = -S_time_derivative
    xp = -0.5 * g * t * t if x_prime is None else as_vector(x_prime)
    E_prime = E + mass * float(g @ xp) - mass * float(g @ g) * t * t

    def s_prime(time: float) -> float:
        return newtonian_phase(S_time_derivative * time, xp, time, mass, g).newtonian_phase

    h = rel_step * abs(t) if t != 0 else rel_step
    numeric = -central_difference(s_prime, t, h)
    return EnergyPair(E=E, E_prime=E_prime, difference=E_prime - E, E_prime_numeric=numeric)


def uncertainty_reduction_time(mass: float, g: float, units: UnitSystem) -> float:
    """τ = (ħ/(m g²))^(1/3), from ℰ(τ)·τ ≈ ħ."""
    mass = require_positive_mass(mass)
    g = require_positive(g, "g")
    return (units.hbar / (mass * g * g)) ** (1.0 / 3.0)


def nonlinear_phase_at(mass: float, g: float, t: float, units: UnitSystem) -> float:
    """Dimensionless cubic phase m g² t³/ħ; equals 1 at the uncertainty time."""
    return mass * g * g * t**3 / units.hbar


@dataclass(frozen=True)
class EnergyVelocityRelation:
    """|ℰ(τ)| against (3/2)m·ū² with ū² = 2|g|σ₀ and τ² = 2σ₀/|g|."""

    tau: float
    mean_square_velocity: float
    energy_difference: float
    kinetic_form: float

    def to_dict(self) -> Dict[str, float]:
        return {
            "tau": self.tau,
            "mean_square_velocity": self.mean_square_velocity,
            "energy_difference": self.energy_difference,
            "kinetic_form": self.kinetic_form,
        }


def energy_velocity_relation(mass: float, g: float, sigma0: float) -> EnergyVelocityRelation:
    """Evaluate ℰ at the fall time τ = √(2σ₀/|g|) and compare with (3/2)m·ū²."""
    mass = require_positive_mass(mass)
    g = require_positive(g, "g")
    sigma0 = require_positive(sigma0, "sigma0")
    tau = math.sqrt(2.0 * sigma0 / g)
    u2 = g * g * tau * tau
    return EnergyVelocityRelation(
        tau=tau,
        mean_square_velocity=u2,
        energy_difference=energy_difference(mass, g, tau),
        kinetic_form=1.5 * mass * u2,
    )
