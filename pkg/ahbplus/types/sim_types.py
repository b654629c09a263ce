"""Enums shared by the kernel, DDR controller and reporting."""

from enum import Enum


class Phase(str, Enum):
    """Kernel phase within a cycle."""

    EVAL = "Eval"
    COMMIT = "Commit"
    IDLE = "Idle"


class TerminatedReason(str, Enum):
    """Why a run stopped."""

    MAX_CYCLES = "MaxCycles"
    ALL_MASTERS_DONE = "AllMastersDone"
    ASSERTION_ABORT = "AssertionAbort"


class BankPhase(str, Enum):
    """Phase of a DDR bank state machine."""

    IDLE = "Idle"
    ACTIVATING = "Activating"
    ACTIVE = "Active"
    BURSTING = "Bursting"
    PRECHARGING = "Precharging"


class CommandKind(str, Enum):
    """DDR command bus opcodes."""

    NOP = "Nop"
    ACTIVATE = "Activate"
    COL_READ = "ColRead"
    COL_WRITE = "ColWrite"
    PRECHARGE = "Precharge"


class ViolationKind(str, Enum):
    """The two assertion families."""

    FATAL_SELF_CHECK = "FatalSelfCheck"
    PROTOCOL_PROPERTY = "ProtocolProperty"


class ReportFormat(str, Enum):
    """Output format of the run report."""

    STRUCT = "struct"
    TABLE = "table"
