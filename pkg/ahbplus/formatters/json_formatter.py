"""Structured (JSON) report format."""

import json
from typing import Any, Dict

from ahbplus.formatters.base_formatter import BaseFormatter


class JSONFormatter(BaseFormatter):
    """JSON output formatter; key order is preserved so output is byte-stable."""

    name = "struct"

    def format(self, data: Dict[str, Any]) -> str:
        return json.dumps(data, indent=2) + "\n"

    def parse(self, text: str) -> Dict[str, Any]:
        return json.loads(text)
