"""Simulation config schema and parsing."""

from ahbplus.config.models import (
    DEFAULT_MAX_CYCLES,
    BusSection,
    CheckerSection,
    DdrSection,
    FaultSection,
    FiltersSection,
    MasterSection,
    OutputsSection,
    RunSection,
    SimConfig,
    WriteBufferSection,
)
from ahbplus.config.parser import (
    apply_overrides,
    load_config,
    load_document,
    parse_config,
    parse_override_value,
    validate_config,
)

__all__ = [
    "DEFAULT_MAX_CYCLES",
    "BusSection",
    "CheckerSection",
    "DdrSection",
    "FaultSection",
    "FiltersSection",
    "MasterSection",
    "OutputsSection",
    "RunSection",
    "SimConfig",
    "WriteBufferSection",
    "apply_overrides",
    "load_config",
    "load_document",
    "parse_config",
    "parse_override_value",
    "validate_config",
]
