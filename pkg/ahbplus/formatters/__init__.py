"""Report formatters."""

from typing import Union

from ahbplus.errors import UnknownFormat
from ahbplus.formatters.base_formatter import BaseFormatter
from ahbplus.formatters.json_formatter import JSONFormatter
from ahbplus.formatters.table_formatter import TableFormatter
from ahbplus.types import ReportFormat

__all__ = [
    "BaseFormatter",
    "JSONFormatter",
    "TableFormatter",
    "get_formatter",
]


def get_formatter(formatter_type: Union[ReportFormat, str]) -> BaseFormatter:
    """Get formatter by type.

    Args:
        formatter_type: ``struct`` or ``table``

    Returns:
        Formatter instance

    Raises:
        UnknownFormat: for any other value.
    """
    try:
        kind = ReportFormat(formatter_type)
    except ValueError:
        raise UnknownFormat(f"unknown report format '{formatter_type}'") from None
    if kind is ReportFormat.STRUCT:
        return JSONFormatter()
    return TableFormatter()
