"""Radial quadrature and ensemble-averaged forces."""

from .averages import (
    ENCLOSED_AT_SIGMA0,
    AveragedForces,
    FieldEstimates,
    averaged_forces,
    enclosed_probability,
    field_estimates,
    mean_grav_acceleration,
    mean_quantum_acceleration,
    mean_square_velocity,
    radial_moment,
)
from .quadrature import QuadratureResult, QuadratureSpec, integrate_radial

__all__ = [
    "ENCLOSED_AT_SIGMA0",
    "AveragedForces",
    "FieldEstimates",
    "averaged_forces",
    "enclosed_probability",
    "field_estimates",
    "mean_grav_acceleration",
    "mean_quantum_acceleration",
    "mean_square_velocity",
    "radial_moment",
    "QuadratureResult",
    "QuadratureSpec",
    "integrate_radial",
]
