"""Shared fixtures."""

from typing import Any, Dict, List, Optional

import pytest

from ahbplus.bus import BusConfig
from ahbplus.config import SimConfig, validate_config
from ahbplus.ddrc import AddressMap, DdrTiming
from ahbplus.simulation import SimResult, run_simulation


def make_config(masters: Optional[List[Dict[str, Any]]] = None, **sections: Any) -> SimConfig:
    """Validated config with one single-beat read master unless told otherwise."""
    document: Dict[str, Any] = {"masters": masters or [{"pattern": "single", "txn_count": 1}]}
    document.update(sections)
    return validate_config(document)


def run_config(masters: Optional[List[Dict[str, Any]]] = None, **sections: Any) -> SimResult:
    return run_simulation(make_config(masters, **sections))


@pytest.fixture
def address_map() -> AddressMap:
    return AddressMap.for_bus(64)


@pytest.fixture
def timing() -> DdrTiming:
    return DdrTiming()


@pytest.fixture
def bus_config() -> BusConfig:
    return BusConfig()


@pytest.fixture
def mixed_traffic() -> List[Dict[str, Any]]:
    """Two readers and two writers, enough to exercise posting and interleaving."""
    return [
        {"pattern": "burst4", "op_mix": "read_only", "txn_count": 12, "count": 2},
        {"pattern": "mixed", "op_mix": "write_only", "txn_count": 12, "count": 2},
    ]
