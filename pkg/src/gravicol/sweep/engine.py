"""Parameter sweeps over mass or packet width."""

from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import Dict, List, Optional

import numpy as np

from ..collapse.criteria import DEFAULT_TRANSITION_BAND
from ..collapse.reduction import estimate_reduction
from ..errors import NonPositiveInput, ValidationError
from ..particle import ParticleSpec
from ..units.constants import PrefactorMode, UnitSystem, parse_mode
from ..utils.logging import get_logger
from ..utils.validation import require_positive

logger = get_logger(__name__)

SWEEP_COLUMNS = [
    "mass",
    "sigma0",
    "m_c",
    "sigma_c",
    "ratio",
    "regime",
    "fall_time",
    "objective_time",
    "uncertainty_time",
]


class SweepVariable(str, Enum):
    """Input varied across a sweep."""

    MASS = "mass"
    SIGMA0 = "sigma0"


def sweep_grid(start: float, stop: float, count: int, log: bool = True) -> np.ndarray:
    """
    Sample points from ``start`` to ``stop`` inclusive.

    Raises:
        ValidationError: On non-positive bounds or count
    """
    start = require_positive(start, "start")
    stop = require_positive(stop, "stop")
    if int(count) != count or count < 1:
        raise NonPositiveInput(f"count must be a positive integer, got {count!r}")
    if count == 1:
        if start != stop:
            raise ValidationError("count 1 requires start == stop")
        return np.array([start])
    if log:
        return np.geomspace(start, stop, int(count))
    return np.linspace(start, stop, int(count))


class SweepEngine:
    """Evaluates reduction estimates over a grid of one input."""

    def __init__(
        self,
        units: UnitSystem,
        fixed_mass: float,
        fixed_sigma0: float,
        mode: PrefactorMode = PrefactorMode.PAPER,
        band: float = DEFAULT_TRANSITION_BAND,
        threads: int = 1,
    ):
        """
        Initialize sweep engine.

        Args:
            units: Unit system for inputs and outputs
            fixed_mass: Mass held fixed while the width varies
            fixed_sigma0: Width held fixed while the mass varies
            mode: Prefactor convention
            band: Transition band half-width around ratio 1
            threads: Worker threads
        """
        self.units = units
        self.fixed_mass = require_positive(fixed_mass, "fixed mass")
        self.fixed_sigma0 = require_positive(fixed_sigma0, "fixed sigma0")
        self.mode = parse_mode(mode)
        self.band = band
        self.threads = max(1, int(threads))

        logger.info(f"Sweep engine initialized with {self.threads} threads in {self.mode.value} mode")

    def spec_for(self, variable: SweepVariable, value: float) -> ParticleSpec:
        """Particle for one grid point."""
        if variable is SweepVariable.MASS:
            return ParticleSpec(mass=value, sigma0=self.fixed_sigma0)
        return ParticleSpec(mass=self.fixed_mass, sigma0=value)

    def evaluate(self, variable: SweepVariable, value: float) -> Dict:
        """One sweep row."""
        spec = self.spec_for(variable, float(value))
        estimate = estimate_reduction(spec, self.units, self.mode, self.band)
        return {
            "mass": spec.mass,
            "sigma0": spec.sigma0,
            "m_c": estimate.m_c,
            "sigma_c": estimate.sigma_c,
            "ratio": estimate.ratio,
            "regime": estimate.regime.value,
            "fall_time": estimate.fall_time,
            "objective_time": estimate.objective_time,
            "uncertainty_time": estimate.uncertainty_time,
        }

    def run(
        self,
        variable: SweepVariable,
        start: float,
        stop: float,
        count: int,
        log: bool = True,
    ) -> List[Dict]:
        """
        Run the sweep.

        Rows come back sorted by the swept variable whatever order the
        workers finish in.

        Args:
            variable: Input to vary
            start: First grid value
            stop: Last grid value
            count: Number of grid points
            log: Geometric spacing when True, linear otherwise

        Returns:
            List of row dictionaries keyed by SWEEP_COLUMNS
        """
        variable = SweepVariable(variable)
        grid = sweep_grid(start, stop, count, log)
        logger.info(f"Sweeping {variable.value} over {len(grid)} points")

        if self.threads == 1 or len(grid) == 1:
            rows = [self.evaluate(variable, v) for v in grid]
        else:
            with ThreadPoolExecutor(max_workers=min(self.threads, len(grid))) as pool:
                rows = list(pool.map(lambda v: self.evaluate(variable, v), grid))

        rows.sort(key=lambda row: row[variable.value])
        return rows

    def get_status(self) -> Dict:
        """Get engine configuration."""
        return {
            "units": self.units.kind.value,
            "mode": self.mode.value,
            "band": self.band,
            "threads": self.threads,
            "fixed_mass": self.fixed_mass,
            "fixed_sigma0": self.fixed_sigma0,
        }


def run_sweep(
    variable: SweepVariable,
    start: float,
    stop: float,
    count: int,
    units: UnitSystem,
    fixed_mass: float,
    fixed_sigma0: float,
    mode: PrefactorMode = PrefactorMode.PAPER,
    log: bool = True,
    band: float = DEFAULT_TRANSITION_BAND,
    threads: Optional[int] = None,
) -> List[Dict]:
    """Convenience wrapper building a SweepEngine for one run."""
    engine = SweepEngine(units, fixed_mass, fixed_sigma0, mode, band, threads or 1)
    return engine.run(variable, start, stop, count, log)
