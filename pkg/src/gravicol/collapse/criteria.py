"""Critical width and mass, regime classification and the numerical force balance."""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional

from scipy import optimize

from ..ensemble.averages import mean_grav_acceleration, mean_quantum_acceleration
from ..ensemble.quadrature import QuadratureSpec
from ..errors import BracketFailure
from ..particle import ParticleSpec
from ..units.constants import PrefactorMode, UnitSystem, parse_mode
from ..utils.logging import get_logger
from ..utils.validation import require_positive_length, require_positive_mass

logger = get_logger(__name__)

# (π/2)·√(2/π): balance of the ensemble-averaged accelerations
EXACT_WIDTH_FACTOR = 0.5 * math.pi * math.sqrt(2.0 / math.pi)

DEFAULT_TRANSITION_BAND = 0.05

# Search window for balance_solve in units of ħ²/(Gm³)
BALANCE_BRACKET = (1e-3, 1e3)


class Regime(str, Enum):
    QUANTUM_DOMINANT = "quantum_dominant"
    TRANSITION = "transition"
    GRAVITY_DOMINANT = "gravity_dominant"


@dataclass(frozen=True)
class RegimeReport:
    """Where a particle sits relative to the critical mass of its width."""

    m_c: float
    sigma_c: float
    regime: Regime
    ratio: float
    mode: PrefactorMode
    band: float = DEFAULT_TRANSITION_BAND

    def to_dict(self) -> Dict[str, object]:
        return {
            "m_c": self.m_c,
            "sigma_c": self.sigma_c,
            "regime": self.regime.value,
            "ratio": self.ratio,
            "mode": self.mode.value,
            "band": self.band,
        }


def _width_factor(mode: PrefactorMode) -> float:
    return EXACT_WIDTH_FACTOR if parse_mode(mode) is PrefactorMode.EXACT else 1.0


def critical_width(
    mass: float,
    units: UnitSystem,
    mode: PrefactorMode = PrefactorMode.PAPER,
) -> float:
    """Width at which self-gravity balances spreading: C·ħ²/(Gm³)."""
    mass = require_positive_mass(mass)
    return _width_factor(mode) * units.hbar**2 / (units.G * mass**3)


def critical_mass(
    sigma0: float,
    units: UnitSystem,
    mode: PrefactorMode = PrefactorMode.PAPER,
) -> float:
    """Inverse of :func:`critical_width`: (C·ħ²/(Gσ₀))^(1/3)."""
    sigma0 = require_positive_length(sigma0, "sigma0")
    return (_width_factor(mode) * units.hbar**2 / (units.G * sigma0)) ** (1.0 / 3.0)


def regime_for_ratio(ratio: float, band: float = DEFAULT_TRANSITION_BAND) -> Regime:
    if abs(ratio - 1.0) <= band:
        return Regime.TRANSITION
    if ratio > 1.0:
        return Regime.GRAVITY_DOMINANT
    return Regime.QUANTUM_DOMINANT


def classify(
    spec: ParticleSpec,
    units: UnitSystem,
    mode: PrefactorMode = PrefactorMode.PAPER,
    band: float = DEFAULT_TRANSITION_BAND,
) -> RegimeReport:
    """
    Classify the motion by the mass ratio m/m_c(σ₀).

    Args:
        spec: Particle
        units: Unit system
        mode: Prefactor convention for m_c
        band: Half-width of the transition band in mass ratio

    Returns:
        RegimeReport
    """
    mode = parse_mode(mode)
    m_c = critical_mass(spec.sigma0, units, mode)
    ratio = spec.mass / m_c
    return RegimeReport(
        m_c=m_c,
        sigma_c=critical_width(spec.mass, units, mode),
        regime=regime_for_ratio(ratio, band),
        ratio=ratio,
        mode=mode,
        band=band,
    )


def balance_solve(
    mass: float,
    units: UnitSystem,
    qspec: Optional[QuadratureSpec] = None,
    xtol: float = 1e-14,
    rtol: float = 1e-12,
) -> float:
    """
    Width at which the quadrature mean accelerations are equal.

    Brent's method on a_q/a_g − 1 over σ₀ ∈ [1e-3, 1e3]·ħ²/(Gm³), using the
    quadrature averages rather than their closed forms.

    Raises:
        NonPositiveMass: If mass is not positive
        BracketFailure: If the ratio does not change sign on the window
    """
    mass = require_positive_mass(mass)
    width_unit = units.hbar**2 / (units.G * mass**3)

    def imbalance(s: float) -> float:
        spec = ParticleSpec(mass=mass, sigma0=s * width_unit)
        return (
            mean_quantum_acceleration(spec, units, qspec)
            / mean_grav_acceleration(spec, units, qspec)
            - 1.0
        )

    low, high = BALANCE_BRACKET
    f_low, f_high = imbalance(low), imbalance(high)
    if f_low * f_high > 0:
        raise BracketFailure(
            "mean accelerations do not cross",
            interval=(low * width_unit, high * width_unit),
            module=__name__,
            tolerance=rtol,
        )
    s_star, info = optimize.brentq(
        imbalance, low, high, xtol=xtol, rtol=rtol, full_output=True, disp=False
    )
    if not info.converged:
        raise BracketFailure(
            f"Brent iteration stopped: {info.flag}",
            interval=(low * width_unit, high * width_unit),
            module=__name__,
            tolerance=rtol,
        )
    logger.debug(f"Force balance at sigma0 = {s_star:.12g} hbar^2/(G m^3) after {info.iterations} iterations")
    return s_star * width_unit
