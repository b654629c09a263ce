"""Config parsing, validation and ``--set`` overrides."""

import copy
import json
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Union

from pydantic import ValidationError

from ahbplus.config.models import SimConfig
from ahbplus.errors import ConfigParseError, ConfigValidationError

_BOOL_WORDS = {"on": True, "true": True, "yes": True, "off": False, "false": False, "no": False}


def parse_config(text: Union[bytes, str]) -> SimConfig:
    """Parse and validate a JSON config document.

    Raises:
        ConfigParseError: if the text is not a JSON object (with line and column).
        ConfigValidationError: if a field is missing, unknown or out of range.
    """
    return validate_config(load_document(text))


def load_document(text: Union[bytes, str]) -> Dict[str, Any]:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ConfigParseError(f"not UTF-8 ({exc.reason})", line=1, column=exc.start + 1) from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    if not isinstance(data, dict):
        raise ConfigParseError("top level must be an object", line=1, column=1)
    return data


def validate_config(data: Dict[str, Any]) -> SimConfig:
    try:
        return SimConfig.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        field = ".".join(str(part) for part in first["loc"]) or "<root>"
        raise ConfigValidationError(field, first["msg"]) from exc


def parse_override_value(text: str) -> Any:
    """``on/off/true/false`` become booleans, JSON literals parse as JSON, the rest stays a string."""
    word = text.strip().lower()
    if word in _BOOL_WORDS:
        return _BOOL_WORDS[word]
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def apply_overrides(data: Dict[str, Any], overrides: Iterable[str]) -> Dict[str, Any]:
    """Return a copy of ``data`` with each ``dotted.key=value`` applied.

    Numeric path parts index into lists (``masters.0.rt=true``).

    Raises:
        ConfigValidationError: on a malformed override or a path through a non-container.
    """
    result = copy.deepcopy(data)
    for override in overrides:
        key, sep, raw = override.partition("=")
        if not sep or not key:
            raise ConfigValidationError(override, "override must look like key=value")
        parts = key.split(".")
        node: Any = result
        for part in parts[:-1]:
            node = _descend(node, part, key)
        _assign(node, parts[-1], parse_override_value(raw), key)
    return result


def _descend(node: Any, part: str, key: str) -> Any:
    if isinstance(node, list):
        index = _index(node, part, key)
        return node[index]
    if not isinstance(node, dict):
        raise ConfigValidationError(key, f"'{part}' is not inside a section")
    return node.setdefault(part, {})


def _assign(node: Any, part: str, value: Any, key: str) -> None:
    if isinstance(node, list):
        node[_index(node, part, key)] = value
    elif isinstance(node, dict):
        node[part] = value
    else:
        raise ConfigValidationError(key, f"'{part}' is not inside a section")


def _index(node: list, part: str, key: str) -> int:
    try:
        index = int(part)
    except ValueError:
        raise ConfigValidationError(key, f"'{part}' is not a list index") from None
    if not 0 <= index < len(node):
        raise ConfigValidationError(key, f"index {index} out of range")
    return index


def load_config(
    source: Union[str, Path, bytes, Dict[str, Any]],
    overrides: Iterable[str] = (),
    seed: Optional[int] = None,
    max_cycles: Optional[int] = None,
) -> SimConfig:
    """Read a config file (or document), apply overrides and validate.

    ``seed`` and ``max_cycles`` take precedence over both the file and ``overrides``.
    """
    if isinstance(source, dict):
        data = source
    elif isinstance(source, bytes):
        data = load_document(source)
    else:
        data = load_document(Path(source).read_bytes())
    extra = list(overrides)
    if seed is not None:
        extra.append(f"run.seed={seed}")
    if max_cycles is not None:
        extra.append(f"run.max_cycles={max_cycles}")
    return validate_config(apply_overrides(data, extra))
