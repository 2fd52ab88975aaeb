"""
Gaussian variational minimisation of the Schrödinger–Newton energy.

For a normalised Gaussian of width σ the energy is
K + E_G = 3ħ²/(8mσ²) − Gm²/(2√πσ). The two coefficients are computed once by
radial quadrature at σ = 1 and rescaled; the self-gravity coefficient comes
from the shell-theorem form of the double integral.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional, Tuple

from scipy import optimize

from ..ensemble.quadrature import QuadratureSpec, integrate_interval
from ..errors import BracketFailure, NumericalError
from ..particle import ParticleSpec
from ..units.constants import UnitSystem
from ..units.scaling import sn_dimensionless_scale
from ..utils.logging import get_logger
from ..utils.validation import require_positive_mass

logger = get_logger(__name__)

SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)

KINETIC_COEFFICIENT = 3.0 / 8.0
SELF_GRAVITY_COEFFICIENT = -1.0 / (2.0 * math.sqrt(math.pi))

# Search window in units of ħ²/(Gm³)
MINIMIZE_BOUNDS = (1e-2, 1e2)

# Relative agreement required between quadrature and closed-form self-gravity
SELF_GRAVITY_CHECK = 1e-8


@dataclass(frozen=True)
class SNEnergyBreakdown:
    """Kinetic and self-gravitational energy of a Gaussian trial state."""

    kinetic: float
    self_grav: float
    sigma: float
    self_grav_closed_form: float

    @property
    def total(self) -> float:
        return self.kinetic + self.self_grav

    def to_dict(self) -> Dict[str, float]:
        return {
            "kinetic": self.kinetic,
            "self_grav": self.self_grav,
            "total": self.total,
            "sigma": self.sigma,
            "self_grav_closed_form": self.self_grav_closed_form,
        }


def _shell(x: float) -> float:
    # 4πx²ρ(x) for unit width
    return SQRT_2_OVER_PI * x * x * math.exp(-0.5 * x * x)


@lru_cache(maxsize=None)
def quadrature_coefficients(qspec: QuadratureSpec = QuadratureSpec()) -> Tuple[float, float]:
    """
    (kinetic, self-gravity) coefficients at σ = 1, ħ = m = G = 1.

    Kinetic: ½∫|∂ψ/∂r|²4πr²dr with ∂ψ/∂r = −(r/2)ψ.
    Self-gravity: −½∫4πr²ρ(r)[P(r)/r + ∫_r^∞ 4πr′ρ(r′)dr′]dr, P the enclosed mass.
    """
    upper = qspec.truncation_radius

    kinetic = integrate_interval(lambda x: 0.5 * 0.25 * x * x * _shell(x), 0.0, upper, qspec)

    def potential(x: float) -> float:
        enclosed = integrate_interval(_shell, 0.0, x, qspec).unwrap(module=__name__)
        tail = integrate_interval(
            lambda y: _shell(y) / y, x, upper, qspec
        ).unwrap(module=__name__)
        return enclosed / x + tail

    gravity = integrate_interval(lambda x: -0.5 * _shell(x) * potential(x), 0.0, upper, qspec)
    return (
        kinetic.unwrap(module=__name__, tolerance=qspec.rel_tol),
        gravity.unwrap(module=__name__, tolerance=qspec.rel_tol),
    )


def sn_energy(
    spec: ParticleSpec,
    units: UnitSystem,
    qspec: Optional[QuadratureSpec] = None,
) -> SNEnergyBreakdown:
    """
    Energy of the Gaussian of width ``spec.sigma0``.

    Raises:
        NumericalError: If the quadrature self-gravity misses the closed form
    """
    qspec = qspec or QuadratureSpec()
    c_kin, c_grav = quadrature_coefficients(qspec)
    sigma, m = spec.sigma0, spec.mass
    self_grav = c_grav * units.G * m**2 / sigma
    closed = SELF_GRAVITY_COEFFICIENT * units.G * m**2 / sigma
    if abs(self_grav - closed) > SELF_GRAVITY_CHECK * abs(closed):
        raise NumericalError(
            f"self-gravity quadrature {self_grav!r} disagrees with closed form {closed!r}",
            module=__name__,
            tolerance=SELF_GRAVITY_CHECK,
        )
    return SNEnergyBreakdown(
        kinetic=c_kin * units.hbar**2 / (m * sigma**2),
        self_grav=self_grav,
        sigma=sigma,
        self_grav_closed_form=closed,
    )


@dataclass(frozen=True)
class SNMinimum:
    """Variational optimum: width, its value in ħ²/(Gm³), and the energy there."""

    sigma_star: float
    dimensionless_width: float
    energy: SNEnergyBreakdown

    def to_dict(self) -> Dict[str, object]:
        return {
            "sigma_star": self.sigma_star,
            "dimensionless_width": self.dimensionless_width,
            "energy": self.energy.to_dict(),
        }


def sn_minimize(
    mass: float,
    units: UnitSystem,
    qspec: Optional[QuadratureSpec] = None,
    xatol: float = 1e-12,
) -> SNMinimum:
    """
    Minimise the Gaussian energy over the width.

    Bounded Brent search in s = σ/(ħ²/(Gm³)) on [1e-2, 1e2]; the optimum in s
    does not depend on the mass.

    Raises:
        BracketFailure: If the optimum sits on a window edge
    """
    mass = require_positive_mass(mass)
    qspec = qspec or QuadratureSpec()
    c_kin, c_grav = quadrature_coefficients(qspec)
    scale = sn_dimensionless_scale(ParticleSpec(mass=mass, sigma0=1.0), units)

    def total(s: float) -> float:
        return c_kin / s**2 + c_grav / s

    low, high = MINIMIZE_BOUNDS
    result = optimize.minimize_scalar(
        total, bounds=(low, high), method="bounded", options={"xatol": xatol}
    )
    s_star = float(result.x)
    edge = 1e3 * xatol + 1e-6 * s_star
    if not result.success or s_star - low < edge or high - s_star < edge:
        raise BracketFailure(
            f"energy minimum not interior: {result.message}",
            interval=(low * scale.length, high * scale.length),
            module=__name__,
            tolerance=xatol,
        )
    sigma_star = s_star * scale.length
    logger.debug(f"Variational width {s_star:.12g} hbar^2/(G m^3) after {result.nfev} evaluations")
    return SNMinimum(
        sigma_star=sigma_star,
        dimensionless_width=s_star,
        energy=sn_energy(ParticleSpec(mass=mass, sigma0=sigma_star), units, qspec),
    )
