"""Report schema and validation."""

from ahbplus.schema.report_schema import REPORT_SCHEMA
from ahbplus.schema.validator import SchemaValidationError, validate_json_schema, validate_report

__all__ = [
    "REPORT_SCHEMA",
    "SchemaValidationError",
    "validate_json_schema",
    "validate_report",
]
