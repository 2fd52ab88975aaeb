"""Parameter sweeps."""

from .engine import SWEEP_COLUMNS, SweepEngine, SweepVariable, run_sweep, sweep_grid

__all__ = ["SWEEP_COLUMNS", "SweepEngine", "SweepVariable", "run_sweep", "sweep_grid"]
