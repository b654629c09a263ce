"""Flat comma-separated report format.

One ``key,value`` row per leaf. Keys are paths such as
``metrics.masters[3].throughput``; values are JSON literals, so parsing a
table gives back exactly the structured document.
"""

import csv
import io
import json
import re
from typing import Any, Dict, Iterator, List, Tuple, Union

from ahbplus.formatters.base_formatter import BaseFormatter

TABLE_HEADER = ("key", "value")
_TOKEN = re.compile(r"\[(\d+)\]|\.?([^.\[\]]+)")

PathPart = Union[str, int]


def flatten(data: Any, prefix: str = "") -> Iterator[Tuple[str, Any]]:
    if isinstance(data, dict) and data:
        for key, value in data.items():
            yield from flatten(value, f"{prefix}.{key}" if prefix else str(key))
    elif isinstance(data, list) and data:
        for index, value in enumerate(data):
            yield from flatten(value, f"{prefix}[{index}]")
    else:
        yield prefix, data


def split_key(key: str) -> List[PathPart]:
    parts: List[PathPart] = []
    for index, name in _TOKEN.findall(key):
        parts.append(int(index) if index else name)
    return parts


def unflatten(rows: List[Tuple[str, Any]]) -> Dict[str, Any]:
    root: Dict[str, Any] = {}
    for key, value in rows:
        parts = split_key(key)
        node: Any = root
        for part, following in zip(parts, parts[1:]):
            empty = [] if isinstance(following, int) else {}
            if isinstance(part, int):
                if part == len(node):
                    node.append(empty)
                node = node[part]
            else:
                node = node.setdefault(part, empty)
        last = parts[-1]
        if isinstance(last, int):
            node.append(value)
        else:
            node[last] = value
    return root


class TableFormatter(BaseFormatter):
    """Comma-separated ``key,value`` export."""

    name = "table"

    def format(self, data: Dict[str, Any]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(TABLE_HEADER)
        for key, value in flatten(data):
            writer.writerow((key, json.dumps(value)))
        return buffer.getvalue()

    def parse(self, text: str) -> Dict[str, Any]:
        reader = csv.reader(io.StringIO(text))
        header = next(reader, None)
        if header is None or tuple(header) != TABLE_HEADER:
            raise ValueError(f"not a report table (header {header})")
        return unflatten([(key, json.loads(value)) for key, value in reader])
