"""Collapse criteria, fall dynamics, observer frames and reduction temperatures."""

from .criteria import (
    Regime,
    RegimeReport,
    balance_solve,
    classify,
    critical_mass,
    critical_width,
)
from .force_models import FieldModel, ForceModel, ForceSelection, LocalForceModel, MeanForceModel
from .frames import (
    EnergyPair,
    FrameTransform,
    PhaseDecomposition,
    energy_pair,
    newtonian_phase,
    to_accelerated_frame,
    uncertainty_reduction_time,
)
from .reduction import ReductionEstimate, estimate_reduction
from .thermo import (
    TemperatureReport,
    ensemble_temperature,
    reduction_temperature_compton,
    reduction_temperature_schwarzschild,
    temperature_report,
)
from .trajectories import (
    IntegratorSpec,
    Trajectory,
    TrajectoryState,
    fall_closed_form,
    fall_time,
    free_packet_trajectory,
    integrate_bohmian,
    objective_reduction_time,
)

__all__ = [
    "Regime",
    "RegimeReport",
    "balance_solve",
    "classify",
    "critical_mass",
    "critical_width",
    "FieldModel",
    "ForceModel",
    "ForceSelection",
    "LocalForceModel",
    "MeanForceModel",
    "EnergyPair",
    "FrameTransform",
    "PhaseDecomposition",
    "energy_pair",
    "newtonian_phase",
    "to_accelerated_frame",
    "uncertainty_reduction_time",
    "ReductionEstimate",
    "estimate_reduction",
    "TemperatureReport",
    "ensemble_temperature",
    "reduction_temperature_compton",
    "reduction_temperature_schwarzschild",
    "temperature_report",
    "IntegratorSpec",
    "Trajectory",
    "TrajectoryState",
    "fall_closed_form",
    "fall_time",
    "free_packet_trajectory",
    "integrate_bohmian",
    "objective_reduction_time",
]
