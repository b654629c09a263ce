"""Optional functional memory.

Beats carry no real data. When enabled, every write beat stores a token
``(txn_id << 48) | beat_address`` naming the transaction that wrote it, and
every read beat checks that whatever is stored at its address was written
for that address. Comparing final contents therefore compares the last
writer of every beat, not just which beats were written.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from ahbplus.constants import TOKEN_WRITER_SHIFT

_ADDR_MASK = (1 << TOKEN_WRITER_SHIFT) - 1


def make_token(txn_id: int, beat_addr: int) -> int:
    return (txn_id << TOKEN_WRITER_SHIFT) | beat_addr


def token_writer(token: int) -> int:
    return token >> TOKEN_WRITER_SHIFT


@dataclass(frozen=True)
class IntegrityFault:
    """A read beat found a token written for another address."""

    cycle: int
    txn_id: int
    addr: int
    token: int

    def __str__(self) -> str:
        return f"txn {self.txn_id:#x} read {self.addr:#x} holding token {self.token:#x}"


@dataclass
class FunctionalMemory:
    """Sparse beat-address -> token store."""

    cells: Dict[int, int] = field(default_factory=dict)

    def write(self, txn_id: int, beat_addr: int) -> None:
        self.cells[beat_addr] = make_token(txn_id, beat_addr)

    def check(self, beat_addr: int) -> Optional[int]:
        """Return the offending token if the stored one belongs to another address."""
        token = self.cells.get(beat_addr)
        if token is None or (token & _ADDR_MASK) == beat_addr:
            return None
        return token

    def writer(self, beat_addr: int) -> Optional[int]:
        """Id of the transaction that last wrote ``beat_addr``."""
        token = self.cells.get(beat_addr)
        return None if token is None else token_writer(token)

    def corrupt(self, beat_addr: int, token: int) -> None:
        """Overwrite a cell directly (fault injection in tests)."""
        self.cells[beat_addr] = token

    def contents(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(self.cells.items()))

    def __len__(self) -> int:
        return len(self.cells)
