"""Configuration loading."""

from .loader import (
    DEFAULTS_PATH,
    Settings,
    SweepSettings,
    build_settings,
    load_config,
    load_settings,
    sweep_threads,
    validate_settings,
)

__all__ = [
    "DEFAULTS_PATH",
    "Settings",
    "SweepSettings",
    "build_settings",
    "load_config",
    "load_settings",
    "sweep_threads",
    "validate_settings",
]
