"""DDR controller model."""

from ahbplus.ddrc.address_map import AddressMap, DecodedAddress, decode_address
from ahbplus.ddrc.bank import BankReport, BankState, bank_step, idle_bank_report, normalize
from ahbplus.ddrc.commands import NOP, DdrCommand
from ahbplus.ddrc.controller import ActiveBurst, BeatEvent, DdrController, deliver_beats
from ahbplus.ddrc.memory import FunctionalMemory, IntegrityFault
from ahbplus.ddrc.scheduler import QueuedTxn, schedule_command
from ahbplus.ddrc.timing import DdrTiming

__all__ = [
    "NOP",
    "ActiveBurst",
    "AddressMap",
    "BankReport",
    "BankState",
    "BeatEvent",
    "DdrCommand",
    "DdrController",
    "DdrTiming",
    "DecodedAddress",
    "FunctionalMemory",
    "IntegrityFault",
    "QueuedTxn",
    "bank_step",
    "decode_address",
    "deliver_beats",
    "idle_bank_report",
    "normalize",
    "schedule_command",
]
