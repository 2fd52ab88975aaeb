"""
Deterministic JSON and CSV emission.

Floats are printed with 17 significant digits so they read back bit-exactly,
independent of locale. Non-finite floats become ``null`` in JSON and empty
cells in CSV.
"""

import csv
import io
import json
import math
from enum import Enum
from pathlib import Path
from typing import Any, Iterable, List, Mapping, Optional, Sequence

import click
import numpy as np

from ..units.constants import PrefactorMode, UnitSystem
from .documents import Report, format_document, report_table

FORMATS = ("json", "csv")

_INDENT = "  "


def format_float(value: float) -> Optional[str]:
    """17-significant-digit text, or None for NaN and infinities."""
    value = float(value)
    if not math.isfinite(value):
        return None
    return format(value, ".17g")


def _scalar(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, Path):
        return str(value)
    return value


def _encode(value: Any, level: int) -> str:
    value = _scalar(value)
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        text = format_float(value)
        return "null" if text is None else text
    if isinstance(value, str):
        return json.dumps(value)

    pad = _INDENT * (level + 1)
    close = _INDENT * level
    if isinstance(value, Mapping):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(v, level + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + close + "}"
    if isinstance(value, (list, tuple, np.ndarray)):
        if len(value) == 0:
            return "[]"
        items = [f"{pad}{_encode(v, level + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + "\n" + close + "]"

    raise TypeError(f"Object of type {type(value).__name__} is not serializable")


def to_json(document: Any) -> str:
    """Serialize in insertion order with a trailing newline."""
    return _encode(document, 0) + "\n"


def _cell(value: Any) -> str:
    value = _scalar(value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value) or ""
    return str(value)


def to_csv(columns: Sequence[str], rows: Iterable[Mapping[str, Any]]) -> str:
    """
    Header row plus one line per row, in the given column order.

    Missing cells are left empty.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(list(columns))
    for row in rows:
        writer.writerow([_cell(row.get(name)) for name in columns])
    return buffer.getvalue()


def emit(
    report: Report,
    fmt: str,
    units: UnitSystem,
    mode: PrefactorMode,
    settings: Optional[Mapping[str, Any]] = None,
) -> str:
    """
    Render a report in the requested format.

    Raises:
        ValueError: On an unknown format
    """
    if fmt == "json":
        return to_json(format_document(report, units, mode, settings))
    if fmt == "csv":
        table = report_table(report)
        return to_csv(table["columns"], table["rows"])
    raise ValueError(f"Unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def write_output(text: str, path: Optional[str] = None) -> None:
    """Write to ``path``, or to standard output when it is None or '-'."""
    if path is None or path == "-":
        click.echo(text, nl=False)
        return
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)


def read_csv(text: str) -> List[List[str]]:
    """Parse emitted CSV back into raw cells."""
    return list(csv.reader(io.StringIO(text)))
