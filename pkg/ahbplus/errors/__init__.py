"""Error classes for ahbplus."""

from ahbplus.errors.sim_errors import (
    AddressOutOfRange,
    AhbPlusError,
    AlignmentError,
    AssertionAbort,
    ConfigParseError,
    ConfigValidationError,
    FatalSelfCheckError,
    IllegalCommand,
    InvalidSpec,
    NotGranted,
    OutstandingRequest,
    RegistrationAfterStart,
    SimulationPreconditionError,
    UnknownFormat,
    UnknownMaster,
    ZeroCycles,
)

__all__ = [
    "AddressOutOfRange",
    "AhbPlusError",
    "AlignmentError",
    "AssertionAbort",
    "ConfigParseError",
    "ConfigValidationError",
    "FatalSelfCheckError",
    "IllegalCommand",
    "InvalidSpec",
    "NotGranted",
    "OutstandingRequest",
    "RegistrationAfterStart",
    "SimulationPreconditionError",
    "UnknownFormat",
    "UnknownMaster",
    "ZeroCycles",
]
