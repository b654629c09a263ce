"""DDR command bus encoding."""

from dataclasses import dataclass
from typing import Optional

from ahbplus.types import CommandKind


@dataclass(frozen=True)
class DdrCommand:
    """One command on the single DDR command bus."""

    kind: CommandKind = CommandKind.NOP
    bank: Optional[int] = None
    row: Optional[int] = None
    col: Optional[int] = None
    beats: int = 0
    txn_id: Optional[int] = None

    @property
    def is_nop(self) -> bool:
        return self.kind is CommandKind.NOP

    @property
    def is_column(self) -> bool:
        return self.kind in (CommandKind.COL_READ, CommandKind.COL_WRITE)

    def __str__(self) -> str:
        if self.kind is CommandKind.NOP:
            return "NOP"
        if self.kind is CommandKind.ACTIVATE:
            return f"ACT(b{self.bank},r{self.row})"
        if self.kind is CommandKind.PRECHARGE:
            return f"PRE(b{self.bank})"
        op = "RD" if self.kind is CommandKind.COL_READ else "WR"
        return f"{op}(b{self.bank},r{self.row},c{self.col},x{self.beats},{self.txn_id:#x})"


NOP = DdrCommand()


def activate(bank: int, row: int) -> DdrCommand:
    return DdrCommand(CommandKind.ACTIVATE, bank=bank, row=row)


def precharge(bank: int) -> DdrCommand:
    return DdrCommand(CommandKind.PRECHARGE, bank=bank)


def col_read(bank: int, row: int, col: int, beats: int, txn_id: int) -> DdrCommand:
    return DdrCommand(CommandKind.COL_READ, bank=bank, row=row, col=col, beats=beats, txn_id=txn_id)


def col_write(bank: int, row: int, col: int, beats: int, txn_id: int) -> DdrCommand:
    return DdrCommand(CommandKind.COL_WRITE, bank=bank, row=row, col=col, beats=beats, txn_id=txn_id)
