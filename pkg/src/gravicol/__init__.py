"""Gravity-induced wave-function reduction: Gaussian-packet numerics and CLI."""

__version__ = "1.0.0"
