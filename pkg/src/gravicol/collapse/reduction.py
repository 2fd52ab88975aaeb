"""One-stop reduction estimate combining the criteria and both time routes."""

from dataclasses import dataclass
from typing import Dict

from ..particle import ParticleSpec
from ..units.constants import PrefactorMode, UnitSystem, parse_mode
from .criteria import DEFAULT_TRANSITION_BAND, Regime, classify, critical_width
from .frames import uncertainty_reduction_time
from .trajectories import fall_acceleration, fall_time, objective_reduction_time


@dataclass(frozen=True)
class ReductionEstimate:
    """Critical scales, regime and reduction times for one particle."""

    sigma_c: float
    m_c: float
    regime: Regime
    ratio: float
    fall_time: float
    objective_time: float
    uncertainty_time: float
    mode: PrefactorMode

    def to_dict(self) -> Dict[str, object]:
        return {
            "sigma_c": self.sigma_c,
            "m_c": self.m_c,
            "regime": self.regime.value,
            "ratio": self.ratio,
            "fall_time": self.fall_time,
            "objective_time": self.objective_time,
            "uncertainty_time": self.uncertainty_time,
            "mode": self.mode.value,
        }


def critical_spec(mass: float, units: UnitSystem) -> ParticleSpec:
    """Particle placed at its paper-mode critical width."""
    return ParticleSpec(mass=mass, sigma0=critical_width(mass, units, PrefactorMode.PAPER))


def estimate_reduction(
    spec: ParticleSpec,
    units: UnitSystem,
    mode: PrefactorMode = PrefactorMode.PAPER,
    band: float = DEFAULT_TRANSITION_BAND,
) -> ReductionEstimate:
    """
    Reduction estimate at the particle's own width.

    The uncertainty route uses |g| = Gm/σ₀² in both modes; it agrees with the
    fall time and ħ³/(G²m⁵) when σ₀ is the paper-mode critical width.
    """
    mode = parse_mode(mode)
    report = classify(spec, units, mode, band)
    g = fall_acceleration(spec, units, PrefactorMode.PAPER)
    return ReductionEstimate(
        sigma_c=report.sigma_c,
        m_c=report.m_c,
        regime=report.regime,
        ratio=report.ratio,
        fall_time=fall_time(spec, units, mode),
        objective_time=objective_reduction_time(spec.mass, units),
        uncertainty_time=uncertainty_reduction_time(spec.mass, g, units),
        mode=mode,
    )
