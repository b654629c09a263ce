"""Schema validation utilities."""

from typing import Any, Dict, Optional

from jsonschema import Draft7Validator
from jsonschema import ValidationError as JSONSchemaValidationError
from jsonschema import validate as jsonschema_validate

from ahbplus.errors import AhbPlusError
from ahbplus.schema.report_schema import REPORT_SCHEMA


class SchemaValidationError(AhbPlusError):
    """A document does not match its JSON schema."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(message, path=path)
        self.path = path


def validate_json_schema(instance: Any, schema: Dict[str, Any]) -> bool:
    """Validate instance against JSON schema.

    Returns:
        True if valid, raises SchemaValidationError if invalid
    """
    try:
        jsonschema_validate(instance=instance, schema=schema, cls=Draft7Validator)
        return True
    except JSONSchemaValidationError as e:
        path = "/".join(str(part) for part in e.absolute_path)
        raise SchemaValidationError(f"Schema validation failed at '{path}': {e.message}", path=path)


def validate_report(report: Dict[str, Any], schema: Optional[Dict[str, Any]] = None) -> bool:
    """Validate a structured run report against the versioned report schema."""
    return validate_json_schema(report, schema or REPORT_SCHEMA)
