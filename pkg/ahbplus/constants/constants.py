"""Simulator-wide constants."""

# Filters in evaluation order; F1 and F7 cannot be switched off.
FILTER_NAMES = (
    "RequestValid",
    "AccessPermission",
    "QosUrgent",
    "WriteBufferPressure",
    "IdleBank",
    "StaticPriority",
    "RoundRobin",
)
NUM_FILTERS = len(FILTER_NAMES)
ALWAYS_ON_FILTERS = (1, 7)

SUPPORTED_BUS_WIDTHS = (32, 64, 128)

# Default DDR timing (cycles) and geometry
DEFAULT_TRCD = 3
DEFAULT_TRP = 3
DEFAULT_TCL = 3
DEFAULT_TRAS = 7
DEFAULT_COL_BITS = 8
DEFAULT_BANK_BITS = 2
DEFAULT_ROW_BITS = 13

# Traffic defaults
DEFAULT_TXN_COUNT = 200
DEFAULT_WRITE_BUFFER_DEPTH = 4
DEFAULT_QOS_URGENCY_THRESHOLD = 8
# Rows reserved per master region; base addresses are staggered across banks.
ROWS_PER_MASTER = 64

# Starvation bound when no real-time master sets an objective.
DEFAULT_STARVATION_BOUND = 20_000
STARVATION_OBJECTIVE_FACTOR = 10

# Transaction ids are (master << TXN_ID_SHIFT) | sequence
TXN_ID_SHIFT = 32
# Functional memory tokens are (writer txn id << TOKEN_WRITER_SHIFT) | beat address
TOKEN_WRITER_SHIFT = 48

REPORT_SCHEMA_VERSION = 1
CONFIG_VERSION = 1

__all__ = [
    "FILTER_NAMES",
    "NUM_FILTERS",
    "ALWAYS_ON_FILTERS",
    "SUPPORTED_BUS_WIDTHS",
    "DEFAULT_TRCD",
    "DEFAULT_TRP",
    "DEFAULT_TCL",
    "DEFAULT_TRAS",
    "DEFAULT_COL_BITS",
    "DEFAULT_BANK_BITS",
    "DEFAULT_ROW_BITS",
    "DEFAULT_TXN_COUNT",
    "DEFAULT_WRITE_BUFFER_DEPTH",
    "DEFAULT_QOS_URGENCY_THRESHOLD",
    "ROWS_PER_MASTER",
    "DEFAULT_STARVATION_BOUND",
    "STARVATION_OBJECTIVE_FACTOR",
    "TXN_ID_SHIFT",
    "TOKEN_WRITER_SHIFT",
    "REPORT_SCHEMA_VERSION",
    "CONFIG_VERSION",
]
