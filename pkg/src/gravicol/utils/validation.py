"""Precondition checks for scalar physical inputs."""

import math
from numbers import Real

from ..errors import NegativeRadius, NonPositiveInput, NonPositiveLength, NonPositiveMass


def _is_number(value: float) -> bool:
    # numbers.Real covers numpy scalars
    return isinstance(value, Real) and not isinstance(value, bool)


def _is_real(value: float) -> bool:
    return _is_number(value) and math.isfinite(value)


def require_positive_mass(mass: float) -> float:
    """Return ``mass`` as float, raising NonPositiveMass unless it is finite and > 0."""
    if not _is_real(mass) or mass <= 0:
        raise NonPositiveMass(f"mass must be a finite positive number, got {mass!r}")
    return float(mass)


def require_positive_length(length: float, name: str = "length") -> float:
    """Return ``length`` as float, raising NonPositiveLength unless it is finite and > 0."""
    if not _is_real(length) or length <= 0:
        raise NonPositiveLength(f"{name} must be a finite positive number, got {length!r}")
    return float(length)


def require_radius(r: float, name: str = "r") -> float:
    """Return a radial coordinate, raising NegativeRadius when it is negative or NaN."""
    if not _is_number(r) or math.isnan(r) or r < 0:
        raise NegativeRadius(f"{name} must be >= 0, got {r!r}")
    return float(r)


def require_positive(value: float, name: str) -> float:
    """Return ``value`` as float, raising NonPositiveInput unless it is finite and > 0."""
    if not _is_real(value) or value <= 0:
        raise NonPositiveInput(f"{name} must be a finite positive number, got {value!r}")
    return float(value)


def require_non_negative(value: float, name: str) -> float:
    """Return ``value`` as float, raising NonPositiveInput unless it is finite and >= 0."""
    if not _is_real(value) or value < 0:
        raise NonPositiveInput(f"{name} must be a finite non-negative number, got {value!r}")
    return float(value)
