"""Byte address to (row, bank, col) decoding.

Layout, most significant first: ``row | bank | col | beat offset``.
"""

from dataclasses import dataclass
from typing import NamedTuple

from ahbplus.constants import DEFAULT_BANK_BITS, DEFAULT_COL_BITS, DEFAULT_ROW_BITS
from ahbplus.errors import AddressOutOfRange, InvalidSpec


class DecodedAddress(NamedTuple):
    row: int
    bank: int
    col: int


@dataclass(frozen=True)
class AddressMap:
    """Field widths of the DDR address map."""

    beat_offset_bits: int = 3
    col_bits: int = DEFAULT_COL_BITS
    bank_bits: int = DEFAULT_BANK_BITS
    row_bits: int = DEFAULT_ROW_BITS

    def __post_init__(self):
        for name in ("beat_offset_bits", "col_bits", "bank_bits", "row_bits"):
            if getattr(self, name) < 0:
                raise InvalidSpec(f"{name} must be >= 0")

    @classmethod
    def for_bus(
        cls,
        bus_width_bits: int,
        col_bits: int = DEFAULT_COL_BITS,
        bank_bits: int = DEFAULT_BANK_BITS,
        row_bits: int = DEFAULT_ROW_BITS,
    ) -> "AddressMap":
        offset = (bus_width_bits // 8).bit_length() - 1
        return cls(beat_offset_bits=offset, col_bits=col_bits, bank_bits=bank_bits, row_bits=row_bits)

    @property
    def banks(self) -> int:
        return 1 << self.bank_bits

    @property
    def bytes_per_beat(self) -> int:
        return 1 << self.beat_offset_bits

    @property
    def bank_span(self) -> int:
        """Bytes of one row within one bank."""
        return 1 << (self.beat_offset_bits + self.col_bits)

    @property
    def row_span(self) -> int:
        """Bytes covered by one row index across all banks."""
        return self.bank_span << self.bank_bits

    @property
    def memory_bytes(self) -> int:
        return self.row_span << self.row_bits

    def decode(self, addr: int) -> DecodedAddress:
        """Split a byte address into (row, bank, col).

        Raises:
            AddressOutOfRange: if addr is negative or beyond memory_bytes.
        """
        if addr < 0 or addr >= self.memory_bytes:
            raise AddressOutOfRange(addr, self.memory_bytes)
        beat = addr >> self.beat_offset_bits
        col = beat & ((1 << self.col_bits) - 1)
        bank = (beat >> self.col_bits) & ((1 << self.bank_bits) - 1)
        row = beat >> (self.col_bits + self.bank_bits)
        return DecodedAddress(row, bank, col)

    def encode(self, row: int, bank: int, col: int = 0) -> int:
        """Inverse of :meth:`decode` for beat-aligned addresses."""
        beat = (((row << self.bank_bits) | bank) << self.col_bits) | col
        return beat << self.beat_offset_bits


def decode_address(addr: int, address_map: AddressMap) -> DecodedAddress:
    """Module-level form of :meth:`AddressMap.decode`."""
    return address_map.decode(addr)
