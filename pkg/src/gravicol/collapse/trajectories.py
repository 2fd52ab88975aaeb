"""
Fall trajectories and kinematic reduction times.

Closed-form parabolic fall, the free-packet Bohmian trajectory, and adaptive
Runge–Kutta integration of m·r̈ = f_q(r) + f_g(r) with a terminal event at r = 0.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy import integrate

from ..ensemble.quadrature import QuadratureSpec
from ..errors import InvalidSettings, NonFiniteState, NumericalError, StepSizeUnderflow, ValidationError
from ..packet.wavepacket import VectorLike, as_vector, width_at
from ..particle import ParticleSpec
from ..units.constants import PrefactorMode, UnitSystem, parse_mode
from ..utils.differences import richardson_second_difference
from ..utils.logging import get_logger
from ..utils.validation import require_non_negative, require_positive_mass, require_radius
from .force_models import FieldModel, ForceModel, ForceSelection, make_force_model

logger = get_logger(__name__)

_METHODS = {3: "RK23", 5: "RK45", 8: "DOP853"}

# Largest admissible starting radius in units of σ₀
MAX_START_RADIUS = 8.0


@dataclass(frozen=True)
class IntegratorSpec:
    """
    Adaptive Runge–Kutta settings.

    Attributes:
        rel_tol: Relative local error target
        abs_tol: Absolute local error target in units of σ₀ (and σ₀ per fall time)
        max_step: Largest step in seconds of the unit system; inf for no cap
        scheme_order: 3 (Bogacki–Shampine), 5 (Dormand–Prince) or 8 (DOP853)
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_step: float = math.inf
    scheme_order: int = 5

    def __post_init__(self) -> None:
        if not self.rel_tol > 0 or not self.abs_tol > 0:
            raise InvalidSettings("integrator tolerances must be positive")
        if not self.max_step > 0:
            raise InvalidSettings(f"max_step must be positive, got {self.max_step!r}")
        if self.scheme_order not in _METHODS:
            raise InvalidSettings(
                f"scheme_order must be one of {sorted(_METHODS)}, got {self.scheme_order!r}"
            )

    @property
    def method(self) -> str:
        return _METHODS[self.scheme_order]

    def to_dict(self) -> Dict[str, object]:
        return {
            "rel_tol": self.rel_tol,
            "abs_tol": self.abs_tol,
            "max_step": self.max_step,
            "scheme_order": self.scheme_order,
            "method": self.method,
        }


@dataclass(frozen=True)
class TrajectoryState:
    """Radial position and velocity at one instant."""

    t: float
    r: float
    v: float

    def to_dict(self) -> Dict[str, float]:
        return {"t": self.t, "r": self.r, "v": self.v}


@dataclass
class Trajectory:
    """Sampled trajectory plus the r = 0 crossing time when one occurred."""

    states: List[TrajectoryState]
    crossing_time: Optional[float] = None
    model: Dict[str, str] = field(default_factory=dict)

    @property
    def final(self) -> TrajectoryState:
        return self.states[-1]

    @property
    def times(self) -> np.ndarray:
        return np.array([s.t for s in self.states])

    @property
    def radii(self) -> np.ndarray:
        return np.array([s.r for s in self.states])


@dataclass(frozen=True)
class ClosedFormFall:
    """Parabolic fall r(t) = r₀ − ½|g|t², clamped at the center."""

    radius: float
    crossing_time: float
    g: float


def fall_acceleration(
    spec: ParticleSpec,
    units: UnitSystem,
    mode: PrefactorMode = PrefactorMode.PAPER,
) -> float:
    """|g| = Gm/σ₀² (paper) or Gm/(πσ₀²) (exact, the ensemble mean)."""
    g = units.G * spec.mass / spec.sigma0**2
    if parse_mode(mode) is PrefactorMode.EXACT:
        return g / math.pi
    return g


def fall_closed_form(
    spec: ParticleSpec,
    r0: float,
    t: float,
    units: UnitSystem,
    mode: PrefactorMode = PrefactorMode.PAPER,
) -> ClosedFormFall:
    """Radius after falling for ``t`` from rest at ``r0``."""
    r0 = require_radius(r0, "r0")
    t = require_non_negative(t, "t")
    g = fall_acceleration(spec, units, mode)
    crossing = math.sqrt(2.0 * r0 / g)
    radius = max(r0 - 0.5 * g * t * t, 0.0) if t < crossing else 0.0
    return ClosedFormFall(radius=radius, crossing_time=crossing, g=g)


def fall_time(
    spec: ParticleSpec,
    units: UnitSystem,
    mode: PrefactorMode = PrefactorMode.PAPER,
) -> float:
    """
    Time to fall through σ₀ under self-gravity.

    Paper mode √(σ₀³/(Gm)); exact mode √(2σ₀/ḡ) = √(2πσ₀³/(Gm)).
    """
    base = spec.sigma0**3 / (units.G * spec.mass)
    if parse_mode(mode) is PrefactorMode.EXACT:
        return math.sqrt(2.0 * math.pi * base)
    return math.sqrt(base)


def objective_reduction_time(mass: float, units: UnitSystem) -> float:
    """ħ³/(G²m⁵), the fall time at the critical width."""
    mass = require_positive_mass(mass)
    return units.hbar**3 / (units.G**2 * mass**5)


def free_packet_trajectory(
    spec: ParticleSpec,
    x0: VectorLike,
    g: VectorLike,
    t: float,
    units: UnitSystem,
) -> np.ndarray:
    """
    Bohmian path of the falling packet: x(t) = x₀·σ(t)/σ₀ − ½gt².

    Even in the dilation term, so negative t is accepted for symmetric differences.
    """
    dilation = width_at(spec, t, units) / spec.sigma0
    return as_vector(x0) * dilation - 0.5 * as_vector(g) * t * t


def free_packet_acceleration_numeric(
    spec: ParticleSpec,
    x0: VectorLike,
    g: VectorLike,
    t: float,
    units: UnitSystem,
    rel_step: float = 1e-2,
) -> np.ndarray:
    """Second time derivative of :func:`free_packet_trajectory` by extrapolated central differences."""
    h = rel_step * 2.0 * spec.mass * spec.sigma0**2 / units.hbar
    x0 = as_vector(x0)
    return np.array([
        richardson_second_difference(
            lambda s, axis=axis: float(free_packet_trajectory(spec, x0, g, s, units)[axis]),
            t,
            h,
        )
        for axis in range(3)
    ])


def integrate_bohmian(
    spec: ParticleSpec,
    r0: float,
    forces: ForceSelection,
    units: UnitSystem,
    ispec: Optional[IntegratorSpec] = None,
    field_model: FieldModel = FieldModel.LOCAL,
    mode: PrefactorMode = PrefactorMode.EXACT,
    t_end: Optional[float] = None,
    t_eval: Optional[Sequence[float]] = None,
    qspec: Optional[QuadratureSpec] = None,
    model: Optional[ForceModel] = None,
) -> Trajectory:
    """
    Integrate a radial trajectory starting at rest.

    Works in r/σ₀ and t/τ with τ = √(σ₀³/(Gm)), so SI inputs are well scaled.

    Args:
        spec: Particle
        r0: Starting radius in (0, 8σ₀]
        forces: Force terms to include
        units: Unit system
        ispec: Integrator settings
        field_model: LOCAL or MEAN fields
        mode: Prefactor convention for MEAN fields
        t_end: Horizon; defaults to the paper-mode fall time
        t_eval: Sample times; defaults to 201 points on [0, t_end]
        qspec: Quadrature settings for MEAN fields
        model: Explicit force model overriding forces/field_model/mode

    Returns:
        Trajectory sampled at t_eval up to the r = 0 crossing, with the
        crossing state appended when it occurs

    Raises:
        StepSizeUnderflow: If the integrator could not keep its step
        NonFiniteState: If the state becomes NaN or infinite
    """
    r0 = require_radius(r0, "r0")
    if not 0.0 < r0 <= MAX_START_RADIUS * spec.sigma0:
        raise ValidationError(f"r0 must lie in (0, {MAX_START_RADIUS:g} sigma0], got {r0!r}")
    ispec = ispec or IntegratorSpec()
    model = model or make_force_model(spec, units, ForceSelection(forces), field_model, mode, qspec)

    length = spec.sigma0
    time_unit = fall_time(spec, units, PrefactorMode.PAPER)
    accel_unit = length / time_unit**2
    horizon = fall_time(spec, units, PrefactorMode.PAPER) if t_end is None else float(t_end)
    if not horizon > 0:
        raise ValidationError(f"t_end must be positive, got {t_end!r}")
    if t_eval is None:
        samples = np.linspace(0.0, horizon, 201)
    else:
        samples = np.asarray(t_eval, dtype=float)
        if samples.ndim != 1 or np.any(np.diff(samples) <= 0) or samples[0] < 0 or samples[-1] > horizon:
            raise ValidationError("t_eval must be strictly increasing within [0, t_end]")

    def rhs(s: float, y: np.ndarray) -> np.ndarray:
        r = max(y[0], 0.0) * length
        return np.array([y[1], model.acceleration(r) / accel_unit])

    def hits_center(s: float, y: np.ndarray) -> float:
        return y[0]

    hits_center.terminal = True  # type: ignore[attr-defined]
    hits_center.direction = -1  # type: ignore[attr-defined]

    max_step = ispec.max_step / time_unit if math.isfinite(ispec.max_step) else np.inf
    sol = integrate.solve_ivp(
        rhs,
        (0.0, horizon / time_unit),
        np.array([r0 / length, 0.0]),
        method=ispec.method,
        t_eval=samples / time_unit,
        events=hits_center,
        rtol=ispec.rel_tol,
        atol=ispec.abs_tol,
        max_step=max_step,
        dense_output=True,
    )
    if sol.status == -1:
        raise StepSizeUnderflow(
            f"trajectory integration failed: {sol.message}",
            module=__name__,
            tolerance=ispec.rel_tol,
        )
    if not np.all(np.isfinite(sol.y)):
        raise NonFiniteState(
            "trajectory state became non-finite", module=__name__, tolerance=ispec.rel_tol
        )

    states = [
        TrajectoryState(t=s * time_unit, r=y0 * length, v=y1 * length / time_unit)
        for s, y0, y1 in zip(sol.t, sol.y[0], sol.y[1])
    ]
    crossing = None
    if sol.status == 1 and len(sol.t_events[0]) > 0:
        s_cross = float(sol.t_events[0][0])
        v_cross = float(sol.y_events[0][0][1])
        crossing = s_cross * time_unit
        if not states or crossing > states[-1].t:
            states.append(TrajectoryState(t=crossing, r=0.0, v=v_cross * length / time_unit))
        logger.info(f"Trajectory from r0={r0:g} reached the center at t={crossing:g}")
    elif sol.status not in (0, 1):
        raise NumericalError(f"unexpected integrator status {sol.status}", module=__name__)

    return Trajectory(states=states, crossing_time=crossing, model=model.describe())
