"""Falling Gaussian packet and its radial fields."""

from .potentials import (
    FieldKind,
    RadialField,
    force_balance_radius,
    grav_force,
    grav_potential,
    mean_field_potential,
    quantum_force,
    quantum_potential,
)
from .wavepacket import (
    ComplexAmplitude,
    PacketState,
    PhaseConvention,
    amplitude,
    bohmian_acceleration,
    density_spherical,
    guidance_velocity,
    packet_state,
    wavefunction,
    width_at,
)

__all__ = [
    "FieldKind",
    "RadialField",
    "force_balance_radius",
    "grav_force",
    "grav_potential",
    "mean_field_potential",
    "quantum_force",
    "quantum_potential",
    "ComplexAmplitude",
    "PacketState",
    "PhaseConvention",
    "amplitude",
    "bohmian_acceleration",
    "density_spherical",
    "guidance_velocity",
    "packet_state",
    "wavefunction",
    "width_at",
]
