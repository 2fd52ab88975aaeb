"""Schrödinger–Newton variational minimum and radial time evolution."""

from .evolver import (
    DynamicalCrossover,
    EvolverSpec,
    RadialGridState,
    SNEvolution,
    WidthSample,
    dynamical_critical_mass,
    initial_state,
    sn_evolve,
    virial_second_derivative,
)
from .variational import SNEnergyBreakdown, SNMinimum, sn_energy, sn_minimize

__all__ = [
    "DynamicalCrossover",
    "EvolverSpec",
    "RadialGridState",
    "SNEvolution",
    "WidthSample",
    "dynamical_critical_mass",
    "initial_state",
    "sn_evolve",
    "virial_second_derivative",
    "SNEnergyBreakdown",
    "SNMinimum",
    "sn_energy",
    "sn_minimize",
]
