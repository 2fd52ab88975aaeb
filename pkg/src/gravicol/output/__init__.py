"""Document formatting and JSON/CSV emission."""

from .documents import DOCUMENT_KEYS, Report, flatten, format_document, report_table
from .emit import FORMATS, emit, format_float, read_csv, to_csv, to_json, write_output

__all__ = [
    "DOCUMENT_KEYS",
    "Report",
    "flatten",
    "format_document",
    "report_table",
    "FORMATS",
    "emit",
    "format_float",
    "read_csv",
    "to_csv",
    "to_json",
    "write_output",
]
