"""Configuration file loading and validation."""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from ..collapse.trajectories import IntegratorSpec
from ..ensemble.quadrature import QuadratureSpec
from ..errors import InvalidSettings
from ..sn.evolver import EvolverSpec

DEFAULTS_PATH = Path(__file__).with_name("defaults.yaml")

THREADS_ENV = "GRAVICOL_THREADS"

_SECTIONS = {
    "quadrature": ("rel_tol", "abs_tol", "max_subdivisions", "truncation_radius"),
    "integrator": ("rel_tol", "abs_tol", "max_step", "scheme_order"),
    "evolver": ("points", "domain", "norm_tol"),
    "criteria": ("transition_band",),
    "sweep": ("max_threads", "fixed"),
}


@dataclass(frozen=True)
class SweepSettings:
    """Sweep parallelism cap and the fixed-parameter defaults per unit system."""

    max_threads: int = 8
    fixed: Dict[str, Dict[str, float]] = field(default_factory=dict)


@dataclass(frozen=True)
class Settings:
    """Every numerical default, frozen after loading."""

    quadrature: QuadratureSpec = QuadratureSpec()
    integrator: IntegratorSpec = IntegratorSpec()
    evolver: EvolverSpec = EvolverSpec()
    transition_band: float = 0.05
    sweep: SweepSettings = SweepSettings()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "quadrature": self.quadrature.to_dict(),
            "integrator": self.integrator.to_dict(),
            "evolver": self.evolver.to_dict(),
            "transition_band": self.transition_band,
        }


def load_config(config_path: str) -> Dict[str, Any]:
    """
    Load a YAML configuration file.

    Args:
        config_path: Path to the YAML config file

    Returns:
        Parsed configuration dictionary

    Raises:
        FileNotFoundError: If config file doesn't exist
        yaml.YAMLError: If config file is invalid YAML
    """
    path = Path(config_path)
    if not path.exists():
        raise FileNotFoundError(f"Configuration file not found: {config_path}")

    with open(path, "r", encoding="utf-8") as f:
        config = yaml.safe_load(f)

    if config is None:
        return {}

    return config


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def validate_settings(config: Dict[str, Any]) -> List[str]:
    """
    Validate a settings dictionary.

    Args:
        config: Parsed settings

    Returns:
        List of validation error messages (empty if valid)
    """
    errors: List[str] = []

    for section, keys in _SECTIONS.items():
        if section not in config:
            errors.append(f"Missing required section: {section}")
            continue
        block = config[section]
        if not isinstance(block, dict):
            errors.append(f"{section} must be a dictionary")
            continue
        for key in keys:
            if key not in block:
                errors.append(f"Missing required field: {section}.{key}")
            elif key != "fixed" and not _is_number(block[key]):
                errors.append(f"{section}.{key} must be a number")

    band = config.get("criteria", {}).get("transition_band")
    if _is_number(band) and not 0 <= band < 1:
        errors.append("criteria.transition_band must be in [0, 1)")

    sweep = config.get("sweep", {})
    threads = sweep.get("max_threads") if isinstance(sweep, dict) else None
    if _is_number(threads) and (int(threads) != threads or threads < 1):
        errors.append("sweep.max_threads must be a positive integer")

    fixed = sweep.get("fixed") if isinstance(sweep, dict) else None
    if fixed is not None:
        if not isinstance(fixed, dict):
            errors.append("sweep.fixed must be a dictionary")
        else:
            for units, params in fixed.items():
                if not isinstance(params, dict):
                    errors.append(f"sweep.fixed.{units} must be a dictionary")
                    continue
                for name in ("mass", "sigma0"):
                    value = params.get(name)
                    if not _is_number(value) or value <= 0:
                        errors.append(f"sweep.fixed.{units}.{name} must be a positive number")

    return errors


def build_settings(config: Dict[str, Any]) -> Settings:
    """
    Turn a validated dictionary into Settings.

    Raises:
        InvalidSettings: If validation fails or a spec rejects its values
    """
    errors = validate_settings(config)
    if errors:
        raise InvalidSettings("; ".join(errors))

    q = config["quadrature"]
    i = config["integrator"]
    e = config["evolver"]
    s = config["sweep"]
    return Settings(
        quadrature=QuadratureSpec(
            rel_tol=float(q["rel_tol"]),
            abs_tol=float(q["abs_tol"]),
            max_subdivisions=int(q["max_subdivisions"]),
            truncation_radius=float(q["truncation_radius"]),
        ),
        integrator=IntegratorSpec(
            rel_tol=float(i["rel_tol"]),
            abs_tol=float(i["abs_tol"]),
            max_step=float(i["max_step"]),
            scheme_order=int(i["scheme_order"]),
        ),
        evolver=EvolverSpec(
            points=int(e["points"]),
            domain=float(e["domain"]),
            norm_tol=float(e["norm_tol"]),
        ),
        transition_band=float(config["criteria"]["transition_band"]),
        sweep=SweepSettings(
            max_threads=int(s["max_threads"]),
            fixed={
                name: {k: float(v) for k, v in params.items()}
                for name, params in s["fixed"].items()
            },
        ),
    )


def load_settings(config_path: Optional[str] = None) -> Settings:
    """Load the packaged defaults, or another file with the same layout."""
    return build_settings(load_config(str(config_path or DEFAULTS_PATH)))


def sweep_threads(settings: Optional[Settings] = None) -> int:
    """
    Worker count for sweeps.

    The CPU count capped by ``sweep.max_threads``, lowered further by
    GRAVICOL_THREADS when it is set.

    Raises:
        InvalidSettings: If the environment value is not a positive integer
    """
    cap = (settings or Settings()).sweep.max_threads
    default = max(1, min(os.cpu_count() or 1, cap))
    raw = os.environ.get(THREADS_ENV)
    if raw is not None and raw.strip():
        try:
            value = int(raw)
        except ValueError as e:
            raise InvalidSettings(f"{THREADS_ENV} must be an integer, got {raw!r}") from e
        if value < 1:
            raise InvalidSettings(f"{THREADS_ENV} must be >= 1, got {value}")
        return min(default, value)
    return default
