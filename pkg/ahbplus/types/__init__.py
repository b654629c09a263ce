"""Type definitions for ahbplus."""

from ahbplus.types.sim_types import (
    BankPhase,
    CommandKind,
    Phase,
    ReportFormat,
    TerminatedReason,
    ViolationKind,
)
from ahbplus.types.transaction_types import AddrMode, BurstKind, Op, OpMix, PatternKind

__all__ = [
    "AddrMode",
    "BankPhase",
    "BurstKind",
    "CommandKind",
    "Op",
    "OpMix",
    "PatternKind",
    "Phase",
    "ReportFormat",
    "TerminatedReason",
    "ViolationKind",
]
