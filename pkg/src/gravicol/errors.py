"""Exception hierarchy shared by every gravicol module."""

from typing import Optional, Tuple


class GravicolError(Exception):
    """Base class for all gravicol errors."""


class ValidationError(GravicolError, ValueError):
    """An input violates a documented precondition."""


class NonPositiveMass(ValidationError):
    """A mass argument is zero, negative or not finite."""


class NonPositiveLength(ValidationError):
    """A width or length argument is zero, negative or not finite."""


class NegativeRadius(ValidationError):
    """A radial coordinate is negative."""


class NonPositiveInput(ValidationError):
    """A scalar that must be strictly positive is not."""


class InvalidSettings(ValidationError):
    """The numerical settings file failed validation."""


class NumericalError(GravicolError, ArithmeticError):
    """A numerical routine did not reach its tolerance.

    Attributes:
        module: Dotted name of the module that raised
        tolerance: The tolerance that was breached, when there is one
    """

    def __init__(
        self,
        message: str,
        module: str = "",
        tolerance: Optional[float] = None,
    ):
        self.module = module
        self.tolerance = tolerance
        detail = message
        if module:
            detail = f"[{module}] {detail}"
        if tolerance is not None:
            detail = f"{detail} (tolerance {tolerance:g})"
        super().__init__(detail)


class MaxSubdivisionsExceeded(NumericalError):
    """Adaptive quadrature ran out of subintervals."""


class BracketFailure(NumericalError):
    """A root or minimum could not be bracketed.

    Attributes:
        interval: The (low, high) interval that was searched
    """

    def __init__(
        self,
        message: str,
        interval: Tuple[float, float],
        module: str = "",
        tolerance: Optional[float] = None,
    ):
        self.interval = interval
        super().__init__(
            f"{message}; searched [{interval[0]:g}, {interval[1]:g}]",
            module=module,
            tolerance=tolerance,
        )


class StepSizeUnderflow(NumericalError):
    """The adaptive integrator's step collapsed below machine spacing."""


class NonFiniteState(NumericalError):
    """A state vector picked up NaN or infinite entries."""


class NormDriftError(NumericalError):
    """A unitary step changed the wave-function norm beyond tolerance."""
