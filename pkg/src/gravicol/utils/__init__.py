"""Utility modules shared across gravicol."""

from .logging import bind_run_context, clear_run_context, get_logger, setup_logging
from .metrics import OracleDelta, OracleLedger

__all__ = [
    "bind_run_context",
    "clear_run_context",
    "setup_logging",
    "get_logger",
    "OracleDelta",
    "OracleLedger",
]
