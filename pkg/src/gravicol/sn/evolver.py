"""
Radial Schrödinger–Newton evolution.

The radial function u = rψ lives on x_j = j·Δx (j = 1..N) with u = 0 at both
walls. Lengths are in σ₀ and times in mσ₀²/ħ; the equation is
i ∂u/∂s = −½u″ + κΦu with κ = σ₀/L* = Gm³σ₀/ħ² and
Φ(x) = −[P(x)/x + ∫_x^∞ 4π|u|²/x′ dx′], P(x) = ∫_0^x 4π|u|² dx′.
Each step is a Strang splitting: half potential kick, Crank–Nicolson kinetic
step, potential rebuilt from the new density, half kick.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy import integrate, linalg, optimize

from ..collapse.criteria import critical_mass
from ..errors import BracketFailure, InvalidSettings, NonFiniteState, NormDriftError, ValidationError
from ..particle import ParticleSpec
from ..units.constants import PrefactorMode, UnitSystem
from ..units.scaling import sn_dimensionless_scale
from ..utils.logging import get_logger
from ..utils.validation import require_positive
from .variational import sn_energy

logger = get_logger(__name__)

FOUR_PI = 4.0 * math.pi


@dataclass(frozen=True)
class EvolverSpec:
    """
    Grid and guard settings.

    Attributes:
        points: Interior grid points N
        domain: Outer wall in units of σ₀
        norm_tol: Largest allowed norm change per step
        min_points_per_sigma: Resolution floor
        min_domain: Smallest admissible wall radius in σ₀
    """

    points: int = 2048
    domain: float = 16.0
    norm_tol: float = 1e-8
    min_points_per_sigma: float = 32.0
    min_domain: float = 12.0

    def __post_init__(self) -> None:
        if int(self.points) != self.points or self.points < 8:
            raise InvalidSettings(f"points must be an integer >= 8, got {self.points!r}")
        if not self.norm_tol > 0:
            raise InvalidSettings(f"norm_tol must be positive, got {self.norm_tol!r}")
        if not self.domain >= self.min_domain:
            raise InvalidSettings(f"domain must be >= {self.min_domain:g} sigma0, got {self.domain!r}")
        if (self.points + 1) / self.domain < self.min_points_per_sigma:
            raise InvalidSettings(
                f"grid resolves sigma0 with {(self.points + 1) / self.domain:.1f} points; "
                f"need at least {self.min_points_per_sigma:g}"
            )

    @property
    def dx(self) -> float:
        return self.domain / (self.points + 1)

    def to_dict(self) -> Dict[str, float]:
        return {
            "points": self.points,
            "domain": self.domain,
            "norm_tol": self.norm_tol,
        }


@dataclass
class RadialGridState:
    """u = rψ on the interior grid (dimensionless, in σ₀ units)."""

    grid: np.ndarray
    u: np.ndarray
    t: float
    sigma0: float

    @property
    def dx(self) -> float:
        return float(self.grid[1] - self.grid[0])

    @property
    def radii(self) -> np.ndarray:
        """Grid in physical length units."""
        return self.grid * self.sigma0

    @property
    def norm(self) -> float:
        return FOUR_PI * float(np.sum(np.abs(self.u) ** 2)) * self.dx

    @property
    def width(self) -> float:
        """rms radius √⟨r²⟩ in physical units."""
        second_moment = FOUR_PI * float(np.sum(self.grid**2 * np.abs(self.u) ** 2)) * self.dx
        return math.sqrt(second_moment) * self.sigma0


@dataclass(frozen=True)
class WidthSample:
    """One row of the evolution series; energies in the unit system's units."""

    t: float
    w: float
    norm: float
    E_kin: float
    E_grav: float

    @property
    def E_total(self) -> float:
        return self.E_kin + self.E_grav

    def to_dict(self) -> Dict[str, float]:
        return {"t": self.t, "w": self.w, "norm": self.norm, "E_kin": self.E_kin, "E_grav": self.E_grav}


@dataclass
class SNEvolution:
    """Width series and final state of one run."""

    series: List[WidthSample]
    final: RadialGridState
    coupling: float
    time_unit: float
    settings: Dict[str, float] = field(default_factory=dict)

    def widths(self) -> np.ndarray:
        return np.array([s.w for s in self.series])

    def times(self) -> np.ndarray:
        return np.array([s.t for s in self.series])


def coupling_constant(spec: ParticleSpec, units: UnitSystem) -> float:
    """κ = σ₀/L* = Gm³σ₀/ħ², i.e. (m/m_c)³ with the paper-mode critical mass."""
    return spec.sigma0 / sn_dimensionless_scale(spec, units).length


def time_unit(spec: ParticleSpec, units: UnitSystem) -> float:
    """mσ₀²/ħ, the evolver's unit of time."""
    return spec.mass * spec.sigma0**2 / units.hbar


def initial_state(spec: ParticleSpec, espec: Optional[EvolverSpec] = None) -> RadialGridState:
    """Normalised Gaussian of width σ₀ with zero phase at t = 0."""
    espec = espec or EvolverSpec()
    grid = espec.dx * np.arange(1, espec.points + 1)
    u = (grid * (2.0 * math.pi) ** -0.75 * np.exp(-(grid**2) / 4.0)).astype(complex)
    state = RadialGridState(grid=grid, u=u, t=0.0, sigma0=spec.sigma0)
    state.u /= math.sqrt(state.norm)
    return state


def self_potential(grid: np.ndarray, u: np.ndarray) -> np.ndarray:
    """Φ on the grid from the enclosed-mass cumulative integrals (dimensionless)."""
    x = np.concatenate(([0.0], grid))
    density = np.concatenate(([0.0], FOUR_PI * np.abs(u) ** 2))
    enclosed = integrate.cumulative_trapezoid(density, x, initial=0.0)
    weighted = np.concatenate(([0.0], density[1:] / grid))
    outward = integrate.cumulative_trapezoid(weighted, x, initial=0.0)
    tail = outward[-1] - outward
    return -(enclosed[1:] / grid + tail[1:])


def _kinetic_operators(n: int, dx: float, ds: float) -> Tuple[np.ndarray, complex, complex]:
    """Banded (1 + i·ds/2·H) and the diagonal/off-diagonal of (1 − i·ds/2·H), H = −½∂²."""
    r = 1j * ds / (4.0 * dx * dx)
    ab = np.zeros((3, n), dtype=complex)
    ab[0, 1:] = -r
    ab[1, :] = 1.0 + 2.0 * r
    ab[2, :-1] = -r
    return ab, 1.0 - 2.0 * r, r


def _apply_explicit(u: np.ndarray, diag: complex, off: complex) -> np.ndarray:
    out = diag * u
    out[1:] += off * u[:-1]
    out[:-1] += off * u[1:]
    return out


def _energies(grid: np.ndarray, u: np.ndarray, dx: float, kappa: float) -> Tuple[float, float]:
    """Dimensionless (kinetic, self-gravity) energies of the discrete state."""
    padded = np.concatenate(([0.0], u, [0.0]))
    kinetic = 0.5 * FOUR_PI * float(np.sum(np.abs(np.diff(padded)) ** 2)) / dx
    if kappa == 0.0:
        return kinetic, 0.0
    phi = self_potential(grid, u)
    gravity = 0.5 * kappa * FOUR_PI * float(np.sum(phi * np.abs(u) ** 2)) * dx
    return kinetic, gravity


def sn_evolve(
    initial: RadialGridState,
    spec: ParticleSpec,
    dt: float,
    steps: int,
    units: UnitSystem,
    espec: Optional[EvolverSpec] = None,
    gravity: bool = True,
    sample_every: int = 1,
) -> SNEvolution:
    """
    Evolve ``initial`` for ``steps`` steps of length ``dt`` (unit-system seconds).

    Args:
        initial: Starting grid state (see :func:`initial_state`)
        spec: Particle
        dt: Physical time step
        steps: Number of steps
        units: Unit system
        espec: Grid and guard settings
        gravity: False switches the self-gravity term off
        sample_every: Series sampling stride in steps

    Returns:
        SNEvolution with the width series (including t = 0) and final state

    Raises:
        NormDriftError: If a step changes the norm by more than norm_tol
        NonFiniteState: If the state picks up NaN or infinite values
    """
    espec = espec or EvolverSpec()
    dt = require_positive(dt, "dt")
    if int(steps) != steps or steps < 1:
        raise ValidationError(f"steps must be a positive integer, got {steps!r}")
    if int(sample_every) != sample_every or sample_every < 1:
        raise ValidationError(f"sample_every must be a positive integer, got {sample_every!r}")
    if initial.grid.size != espec.points or not math.isclose(initial.dx, espec.dx, rel_tol=1e-12):
        raise ValidationError("initial state does not match the evolver grid")

    t0 = time_unit(spec, units)
    ds = dt / t0
    kappa = coupling_constant(spec, units) if gravity else 0.0
    grid, dx = initial.grid, espec.dx
    energy_unit = units.hbar**2 / (spec.mass * spec.sigma0**2)
    ab, diag, off = _kinetic_operators(grid.size, dx, ds)

    u = initial.u.copy()
    s = initial.t / t0

    def sample(time: float, values: np.ndarray) -> WidthSample:
        state = RadialGridState(grid=grid, u=values, t=time, sigma0=spec.sigma0)
        kinetic, grav = _energies(grid, values, dx, kappa)
        return WidthSample(
            t=time,
            w=state.width,
            norm=state.norm,
            E_kin=kinetic * energy_unit,
            E_grav=grav * energy_unit,
        )

    series = [sample(initial.t, u)]
    potential = kappa * self_potential(grid, u) if kappa else np.zeros(grid.size)
    norm = series[0].norm
    logger.info(f"SN evolution: kappa={kappa:.6g}, N={grid.size}, ds={ds:.3g}, steps={steps}")

    for step in range(1, steps + 1):
        u *= np.exp(-0.5j * ds * potential)
        u = linalg.solve_banded((1, 1), ab, _apply_explicit(u, diag, off))
        if kappa:
            potential = kappa * self_potential(grid, u)
        u *= np.exp(-0.5j * ds * potential)
        s += ds

        if not np.all(np.isfinite(u)):
            raise NonFiniteState(
                f"radial state became non-finite at step {step}", module=__name__
            )
        new_norm = FOUR_PI * float(np.sum(np.abs(u) ** 2)) * dx
        if abs(new_norm - norm) > espec.norm_tol:
            raise NormDriftError(
                f"norm changed by {abs(new_norm - norm):.3g} at step {step}",
                module=__name__,
                tolerance=espec.norm_tol,
            )
        norm = new_norm
        if step % sample_every == 0 or step == steps:
            series.append(sample(s * t0, u))

    final = RadialGridState(grid=grid, u=u, t=s * t0, sigma0=spec.sigma0)
    return SNEvolution(
        series=series,
        final=final,
        coupling=kappa,
        time_unit=t0,
        settings={"dt": dt, "steps": steps, **espec.to_dict()},
    )


def free_width(spec: ParticleSpec, t: float, units: UnitSystem) -> float:
    """rms radius of the freely spreading Gaussian, √3·σ(t)."""
    tau = units.hbar * t / (2.0 * spec.mass * spec.sigma0**2)
    return math.sqrt(3.0) * spec.sigma0 * math.hypot(1.0, tau)


def virial_second_derivative(spec: ParticleSpec, units: UnitSystem) -> float:
    """d²⟨r²⟩/dt² = (2/m)(2K + E_G) at t = 0 for the Gaussian at rest."""
    energy = sn_energy(spec, units)
    return 2.0 / spec.mass * (2.0 * energy.kinetic + energy.self_grav)


def virial_crossover_ratio() -> float:
    """m/m_c where 2K + E_G = 0 for the Gaussian: ((3/2)√π)^(1/3)."""
    return (1.5 * math.sqrt(math.pi)) ** (1.0 / 3.0)


@dataclass(frozen=True)
class DynamicalCrossover:
    """Mass at which the early width change switches sign."""

    mass: float
    ratio_to_critical: float
    virial_ratio: float

    def to_dict(self) -> Dict[str, float]:
        return {
            "mass": self.mass,
            "ratio_to_critical": self.ratio_to_critical,
            "virial_ratio": self.virial_ratio,
        }


def dynamical_critical_mass(
    sigma0: float,
    units: UnitSystem,
    espec: Optional[EvolverSpec] = None,
    probe_time: float = 0.02,
    probe_steps: int = 20,
    bracket: Tuple[float, float] = (0.3, 3.0),
    xtol: float = 1e-6,
) -> DynamicalCrossover:
    """
    Root-find the mass where w(t) − w(0) changes sign at early times.

    Args:
        sigma0: Initial width
        units: Unit system
        espec: Grid settings
        probe_time: Probe horizon in units of mσ₀²/ħ
        probe_steps: Steps per probe evolution
        bracket: Search window in units of the paper-mode critical mass
        xtol: Absolute tolerance on the mass ratio

    Raises:
        BracketFailure: If the width change does not flip sign on the window
    """
    espec = espec or EvolverSpec()
    m_c = critical_mass(sigma0, units, PrefactorMode.PAPER)

    def width_change(ratio: float) -> float:
        spec = ParticleSpec(mass=ratio * m_c, sigma0=sigma0)
        dt = probe_time * time_unit(spec, units) / probe_steps
        run = sn_evolve(initial_state(spec, espec), spec, dt, probe_steps, units, espec)
        return (run.series[-1].w - run.series[0].w) / sigma0

    low, high = bracket
    f_low, f_high = width_change(low), width_change(high)
    if f_low * f_high > 0:
        raise BracketFailure(
            "early width change does not switch sign",
            interval=(low * m_c, high * m_c),
            module=__name__,
            tolerance=xtol,
        )
    ratio = optimize.brentq(width_change, low, high, xtol=xtol)
    return DynamicalCrossover(
        mass=ratio * m_c,
        ratio_to_critical=ratio,
        virial_ratio=virial_crossover_ratio(),
    )


def series_rows(evolution: SNEvolution) -> List[Dict[str, float]]:
    return [sample.to_dict() for sample in evolution.series]


