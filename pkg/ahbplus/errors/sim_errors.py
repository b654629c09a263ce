"""Exception hierarchy for the simulator."""

from typing import Any, Optional


class AhbPlusError(Exception):
    """Base error carrying a user-facing message plus context fields."""

    def __init__(self, message: str, user_message: Optional[str] = None, **kwargs: Any):
        super().__init__(message)
        self.message = message
        self.user_message = user_message or message
        self.context = kwargs

    def __str__(self) -> str:
        return self.user_message

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.message})"


class SimulationPreconditionError(AhbPlusError):
    """An operation was called outside its precondition."""


class RegistrationAfterStart(SimulationPreconditionError):
    """A component was registered after the first step."""


class UnknownMaster(AhbPlusError):
    """A master id outside the registered master ports."""

    def __init__(self, master: int):
        super().__init__(f"unknown master M{master}", master=master)
        self.master = master


class OutstandingRequest(AhbPlusError):
    """The master port already has a request in flight."""

    def __init__(self, master: int, txn_id: int):
        super().__init__(
            f"M{master} already has transaction {txn_id:#x} in flight", master=master
        )
        self.master = master
        self.txn_id = txn_id


class AlignmentError(AhbPlusError):
    """Transaction address not aligned to the bus width."""

    def __init__(self, addr: int, bus_width_bits: int):
        super().__init__(
            f"address {addr:#x} is not aligned to a {bus_width_bits}-bit bus",
            addr=addr,
        )
        self.addr = addr


class NotGranted(AhbPlusError):
    """Data-phase call without holding the grant."""

    def __init__(self, master: int, reason: str = "does not hold the grant"):
        super().__init__(f"M{master} {reason}", master=master)
        self.master = master


class AddressOutOfRange(AhbPlusError):
    """Address beyond the configured memory size."""

    def __init__(self, addr: int, memory_bytes: int):
        super().__init__(
            f"address {addr:#x} outside memory of {memory_bytes:#x} bytes", addr=addr
        )
        self.addr = addr
        self.memory_bytes = memory_bytes


class InvalidSpec(AhbPlusError):
    """A pattern or component parameter set that cannot be built."""


class UnknownFormat(AhbPlusError):
    """Requested report format is not supported."""


class ZeroCycles(AhbPlusError):
    """Metrics cannot be finalized for a run with no cycles."""


class ConfigParseError(AhbPlusError):
    """Config text is not well-formed."""

    def __init__(self, reason: str, line: int, column: int):
        super().__init__(
            f"config parse error at line {line}, column {column}: {reason}",
            line=line,
            column=column,
        )
        self.line = line
        self.column = column
        self.reason = reason


class ConfigValidationError(AhbPlusError):
    """Config is well-formed but a field is invalid."""

    def __init__(self, field: str, reason: str):
        super().__init__(f"invalid config field '{field}': {reason}", field=field)
        self.field = field
        self.reason = reason


class FatalSelfCheckError(AhbPlusError):
    """A model self-check failed; the simulated state is no longer trustworthy."""

    rule = "self-check"


class IllegalCommand(FatalSelfCheckError):
    """A DDR command that the bank FSM does not allow in its current state."""

    rule = "fsm-legality"

    def __init__(self, bank: int, command: Any, state: Any, cycle: int, reason: str):
        super().__init__(
            f"bank {bank}: {command} illegal in {state} at cycle {cycle} ({reason})",
            bank=bank,
            cycle=cycle,
        )
        self.bank = bank
        self.cycle = cycle


class AssertionAbort(AhbPlusError):
    """A fatal assertion fired; the run stopped at ``violation.cycle``."""

    def __init__(self, violation: Any, summary: Any = None):
        super().__init__(f"assertion abort: {violation.rule} at cycle {violation.cycle}")
        self.violation = violation
        self.summary = summary
