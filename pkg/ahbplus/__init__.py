"""ahbplus - transaction-level AHB+ bus and DDR controller simulator."""

from ahbplus.config import SimConfig, load_config, parse_config
from ahbplus.kernel import Component, CycleWorld, SimSummary
from ahbplus.logging import LogScope, SimLogger
from ahbplus.settings import settings
from ahbplus.simulation import Platform, SimResult, build_platform, run_simulation
from ahbplus.version import __version__

__all__ = [
    "Component",
    "CycleWorld",
    "LogScope",
    "Platform",
    "SimConfig",
    "SimLogger",
    "SimResult",
    "SimSummary",
    "build_platform",
    "load_config",
    "parse_config",
    "run_simulation",
    "settings",
    "__version__",
]
