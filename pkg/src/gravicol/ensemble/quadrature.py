"""Adaptive radial quadrature with explicit convergence reporting."""

from dataclasses import dataclass
from typing import Callable, Dict, Optional

from scipy import integrate

from ..errors import InvalidSettings, MaxSubdivisionsExceeded, NumericalError
from ..utils.logging import get_logger

logger = get_logger(__name__)

_SUBDIVISION_MARKER = "maximum number of subdivisions"


@dataclass(frozen=True)
class QuadratureSpec:
    """
    Tolerances for :func:`integrate_radial`.

    Attributes:
        rel_tol: Relative error target, at least 1e-14
        abs_tol: Absolute error target in the integrand's own units
        max_subdivisions: Cap on adaptive subintervals
        truncation_radius: Upper limit as a multiple of σ₀, at least 8
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-13
    max_subdivisions: int = 200
    truncation_radius: float = 12.0

    def __post_init__(self) -> None:
        if not self.rel_tol >= 1e-14:
            raise InvalidSettings(f"rel_tol must be >= 1e-14, got {self.rel_tol!r}")
        if not self.abs_tol >= 0:
            raise InvalidSettings(f"abs_tol must be >= 0, got {self.abs_tol!r}")
        if int(self.max_subdivisions) != self.max_subdivisions or self.max_subdivisions < 1:
            raise InvalidSettings(
                f"max_subdivisions must be a positive integer, got {self.max_subdivisions!r}"
            )
        if not self.truncation_radius >= 8:
            raise InvalidSettings(
                f"truncation_radius must be >= 8, got {self.truncation_radius!r}"
            )

    def to_dict(self) -> Dict[str, float]:
        return {
            "rel_tol": self.rel_tol,
            "abs_tol": self.abs_tol,
            "max_subdivisions": self.max_subdivisions,
            "truncation_radius": self.truncation_radius,
        }


@dataclass(frozen=True)
class QuadratureResult:
    """Best estimate of an integral plus its convergence record."""

    value: float
    error: float
    converged: bool
    subdivisions: int
    message: str = ""

    def unwrap(self, module: str = __name__, tolerance: Optional[float] = None) -> float:
        """
        Return the value, raising when the integrator did not converge.

        Raises:
            MaxSubdivisionsExceeded: Subinterval budget ran out
            NumericalError: Any other quadrature failure
        """
        if self.converged:
            return self.value
        if _SUBDIVISION_MARKER in self.message:
            raise MaxSubdivisionsExceeded(
                f"quadrature hit its subdivision limit ({self.subdivisions}); "
                f"best estimate {self.value!r} with error {self.error:g}",
                module=module,
                tolerance=tolerance,
            )
        raise NumericalError(
            f"quadrature failed: {self.message.strip()}",
            module=module,
            tolerance=tolerance,
        )


def integrate_interval(
    f: Callable[[float], float],
    lower: float,
    upper: float,
    spec: Optional[QuadratureSpec] = None,
) -> QuadratureResult:
    """Integrate ``f`` over [lower, upper] with Gauss–Kronrod bisection."""
    spec = spec or QuadratureSpec()
    out = integrate.quad(
        f,
        lower,
        upper,
        epsabs=spec.abs_tol,
        epsrel=spec.rel_tol,
        limit=int(spec.max_subdivisions),
        full_output=1,
    )
    value, error, info = out[0], out[1], out[2]
    # quad appends a message only on trouble
    message = out[3] if len(out) > 3 else ""
    converged = len(out) <= 3
    result = QuadratureResult(
        value=float(value),
        error=float(error),
        converged=converged,
        subdivisions=int(info.get("last", 0)),
        message=str(message),
    )
    if not converged:
        logger.warning(
            f"Quadrature on [{lower:g}, {upper:g}] did not converge after "
            f"{result.subdivisions} subintervals: value={result.value!r}, error={result.error:g}"
        )
    return result


def integrate_radial(
    f: Callable[[float], float],
    spec: Optional[QuadratureSpec] = None,
    sigma0: float = 1.0,
) -> QuadratureResult:
    """
    Integrate a radial integrand over (0, truncation_radius·σ₀].

    Args:
        f: Integrand of the radius, already including any 4πr² weight
        spec: Tolerances; defaults to QuadratureSpec()
        sigma0: Width that sets the truncation radius

    Returns:
        QuadratureResult; call ``unwrap()`` to raise on non-convergence
    """
    spec = spec or QuadratureSpec()
    return integrate_interval(f, 0.0, spec.truncation_radius * sigma0, spec)
