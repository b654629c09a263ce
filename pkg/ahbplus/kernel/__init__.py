"""Two-phase simulation kernel."""

from ahbplus.kernel.reference import reference_step
from ahbplus.kernel.signals import Register, Wire
from ahbplus.kernel.trace import StateTrace
from ahbplus.kernel.world import Component, CycleWorld, SimSummary

__all__ = [
    "Component",
    "CycleWorld",
    "Register",
    "SimSummary",
    "StateTrace",
    "Wire",
    "reference_step",
]
