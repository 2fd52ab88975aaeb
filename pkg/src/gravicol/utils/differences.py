"""Finite-difference derivatives used as independent oracles for closed forms."""

from typing import Callable

import numpy as np


def central_difference(f: Callable[[float], float], x: float, h: float) -> float:
    """First derivative by the symmetric two-point rule, O(h^2)."""
    return (f(x + h) - f(x - h)) / (2.0 * h)


def second_difference(f: Callable[[float], float], x: float, h: float) -> float:
    """Second derivative by the symmetric three-point rule, O(h^2)."""
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)


def richardson_second_difference(f: Callable[[float], float], x: float, h: float) -> float:
    """
    Second derivative with one Richardson extrapolation step, O(h^4).

    Combines the three-point rule at h and h/2 so the leading h^2 error cancels;
    allows a large enough h that roundoff in f stays negligible.
    """
    coarse = second_difference(f, x, h)
    fine = second_difference(f, x, 0.5 * h)
    return (4.0 * fine - coarse) / 3.0


def gradient(f: Callable[[np.ndarray], float], x: np.ndarray, h: float) -> np.ndarray:
    """
    Gradient of a scalar field by central differences along each axis.

    Args:
        f: Scalar function of a position vector
        x: Evaluation point
        h: Step applied along every axis

    Returns:
        Array with the same shape as ``x``
    """
    x = np.asarray(x, dtype=float)
    grad = np.empty_like(x)
    for axis in range(x.size):
        step = np.zeros_like(x)
        step.flat[axis] = h
        grad.flat[axis] = (f(x + step) - f(x - step)) / (2.0 * h)
    return grad
