"""Logging configuration and per-run context."""

import logging
import sys
from typing import Any

try:
    import structlog
    STRUCTLOG_AVAILABLE = True
except ImportError:
    STRUCTLOG_AVAILABLE = False

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(level: str = "WARNING", use_structlog: bool = True) -> None:
    """
    Route library logging to standard error.

    Standard output is reserved for emitted documents, so every handler,
    stdlib or structlog, writes to stderr. Records carry whatever run context
    :func:`bind_run_context` has set.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR)
        use_structlog: Whether to use structlog if available
    """
    log_level = getattr(logging, level.upper(), logging.WARNING)

    # force: the CLI may be invoked repeatedly in one process with a new stderr
    logging.basicConfig(
        level=log_level,
        format=LOG_FORMAT,
        datefmt="%Y-%m-%d %H:%M:%S",
        stream=sys.stderr,
        force=True,
    )

    if not (STRUCTLOG_AVAILABLE and use_structlog):
        return

    renderer = (
        structlog.processors.JSONRenderer()
        if log_level == logging.DEBUG
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.format_exc_info,
            renderer,
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )


def bind_run_context(**context: Any) -> None:
    """Attach key/value pairs (command, units, mode) to every later record."""
    if STRUCTLOG_AVAILABLE:
        structlog.contextvars.clear_contextvars()
        structlog.contextvars.bind_contextvars(**context)


def clear_run_context() -> None:
    if STRUCTLOG_AVAILABLE:
        structlog.contextvars.clear_contextvars()


def get_logger(name: str):
    """
    Module logger.

    Args:
        name: Logger name (typically __name__)

    Returns:
        structlog bound logger, or a stdlib logger when structlog is missing
    """
    if STRUCTLOG_AVAILABLE:
        return structlog.get_logger(name)
    return logging.getLogger(name)
