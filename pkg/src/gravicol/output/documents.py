"""Report formatting into self-describing documents."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional

from .. import __version__
from ..units.constants import PrefactorMode, UnitSystem
from ..utils.logging import get_logger
from ..utils.metrics import OracleLedger

logger = get_logger(__name__)

DOCUMENT_KEYS = (
    "command",
    "inputs",
    "units",
    "mode",
    "results",
    "oracle_deltas",
    "settings",
    "version",
)


@dataclass
class Report:
    """
    Result of one command before formatting.

    Attributes:
        command: Subcommand name
        inputs: Physical inputs as given
        results: Nested result mapping
        columns: Fixed CSV column order; derived from ``results`` when None
        rows: CSV rows; a single flattened row of ``results`` when None
    """

    command: str
    inputs: Dict[str, Any]
    results: Dict[str, Any]
    columns: Optional[List[str]] = None
    rows: Optional[List[Dict[str, Any]]] = None
    ledger: OracleLedger = field(default_factory=OracleLedger)


def flatten(mapping: Mapping[str, Any], prefix: str = "") -> Dict[str, Any]:
    """
    Flatten nested mappings into dotted keys, dropping list values.

    Args:
        mapping: Possibly nested mapping
        prefix: Key prefix for recursion

    Returns:
        Flat dictionary in traversal order
    """
    flat: Dict[str, Any] = {}
    for key, value in mapping.items():
        name = f"{prefix}{key}"
        if isinstance(value, Mapping):
            flat.update(flatten(value, prefix=f"{name}."))
        elif isinstance(value, (list, tuple)):
            continue
        else:
            flat[name] = value
    return flat


def format_document(
    report: Report,
    units: UnitSystem,
    mode: PrefactorMode,
    settings: Optional[Mapping[str, Any]] = None,
) -> Dict[str, Any]:
    """
    Format a report as a JSON-ready document.

    Args:
        report: Command output
        units: Unit system the numbers are expressed in
        mode: Prefactor convention used
        settings: Numerical settings the run used

    Returns:
        Dictionary with the keys of DOCUMENT_KEYS, in that order
    """
    document = {
        "command": report.command,
        "inputs": dict(report.inputs),
        "units": units.to_dict(),
        "mode": mode.value,
        "results": report.results,
        "oracle_deltas": report.ledger.summary(),
        "settings": dict(settings or {}),
        "version": __version__,
    }

    failures = report.ledger.failures()
    if failures:
        logger.warning(f"Oracle checks outside tolerance: {', '.join(failures)}")

    return document


def report_table(report: Report) -> Dict[str, Any]:
    """
    Tabular view of a report.

    Returns:
        Dictionary with ``columns`` and ``rows``
    """
    rows = report.rows
    if rows is None:
        rows = [{"command": report.command, **flatten(report.inputs, "input."), **flatten(report.results)}]
    columns = report.columns or (list(rows[0].keys()) if rows else [])
    return {"columns": columns, "rows": rows}
