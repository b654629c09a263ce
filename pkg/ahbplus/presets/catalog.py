"""Named preset configs.

The twelve workload presets cover every (mix, pattern) pair: ``read-*`` runs
twelve read masters, ``write-*`` twelve write masters and ``rw-*`` eight
readers plus four writers.
"""

import copy
from typing import Any, Callable, Dict, List, Tuple

from ahbplus.config import SimConfig, validate_config
from ahbplus.errors import InvalidSpec
from ahbplus.types import PatternKind

PresetBuilder = Callable[[], Dict[str, Any]]

_PRESETS: Dict[str, Tuple[str, PresetBuilder]] = {}

MASTERS_PER_PRESET = 12
RW_READERS = 8
RW_WRITERS = 4


def register_preset(name: str, description: str):
    """Decorator registering a function that returns a config document."""

    def decorator(builder: PresetBuilder) -> PresetBuilder:
        _PRESETS[name] = (description, builder)
        return builder

    return decorator


def preset_names() -> List[str]:
    return sorted(_PRESETS)


def describe_preset(name: str) -> str:
    return _lookup(name)[0]


def preset_document(name: str) -> Dict[str, Any]:
    """The raw config document of preset ``name`` (a fresh copy)."""
    return copy.deepcopy(_lookup(name)[1]())


def load_preset(name: str) -> SimConfig:
    return validate_config(preset_document(name))


def _lookup(name: str) -> Tuple[str, PresetBuilder]:
    if name not in _PRESETS:
        raise InvalidSpec(f"unknown preset '{name}' (known: {', '.join(preset_names())})")
    return _PRESETS[name]


def _workload(name: str, masters: List[Dict[str, Any]]) -> Dict[str, Any]:
    return {"name": name, "masters": masters}


def _register_workloads() -> None:
    for kind in PatternKind:
        pattern = kind.value
        read = f"read-{pattern}"
        write = f"write-{pattern}"
        mixed = f"rw-{pattern}"
        register_preset(read, f"{MASTERS_PER_PRESET} {pattern} read masters")(
            lambda name=read, p=pattern: _workload(
                name, [{"pattern": p, "op_mix": "read_only", "count": MASTERS_PER_PRESET}]
            )
        )
        register_preset(write, f"{MASTERS_PER_PRESET} {pattern} write masters")(
            lambda name=write, p=pattern: _workload(
                name, [{"pattern": p, "op_mix": "write_only", "count": MASTERS_PER_PRESET}]
            )
        )
        register_preset(mixed, f"{RW_READERS} {pattern} readers and {RW_WRITERS} writers")(
            lambda name=mixed, p=pattern: _workload(
                name,
                [
                    {"pattern": p, "op_mix": "read_only", "count": RW_READERS},
                    {"pattern": p, "op_mix": "write_only", "count": RW_WRITERS},
                ],
            )
        )


_register_workloads()


@register_preset("single-master", "one burst4 read master, for the simulation speed upper bound")
def _single_master() -> Dict[str, Any]:
    return _workload("single-master", [{"pattern": "burst4", "op_mix": "read_only"}])


@register_preset("qos-stress", "one real-time reader (objective 60) against 11 saturating readers")
def _qos_stress() -> Dict[str, Any]:
    return {
        "name": "qos-stress",
        # slack <= objective - 1: urgent from the first waiting cycle
        "filters": {"qos_urgency_threshold": 59},
        "masters": [
            {"pattern": "burst4", "op_mix": "read_only", "rt": True, "qos_objective": 60},
            {"pattern": "burst8", "op_mix": "read_only", "count": 11},
        ],
    }
