"""Seeded traffic patterns."""

from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple, Union

import numpy as np

from ahbplus.constants import ROWS_PER_MASTER
from ahbplus.ddrc.address_map import AddressMap
from ahbplus.errors import InvalidSpec
from ahbplus.types import AddrMode, BurstKind, Op, OpMix, PatternKind

_FIXED_BEATS = {PatternKind.SINGLE: 1, PatternKind.BURST4: 4, PatternKind.BURST8: 8}
MIXED_BEATS = (1, 4, 8)
# default strides and random offsets keep bursts aligned to the largest burst
MAX_BURST_BEATS = 8


class Stimulus(NamedTuple):
    """One pre-generated request: what to issue and how long to wait before it."""

    op: Op
    addr: int
    burst: BurstKind
    gap: int


@dataclass(frozen=True)
class PatternSpec:
    """Traffic description of one master class.

    Attributes:
        kind: Burst shape.
        op_mix: Read-only or write-only.
        txn_count: Transactions per master.
        seed: Run seed; each master derives its own stream from (seed, master id).
        addr_stride: Bytes between consecutive addresses (sequential mode);
            None means one max-size burst.
        addr_mode: Sequential stride or seeded-random offsets.
        inter_arrival: Inclusive (min, max) idle cycles between a completion
            and the next request; a fixed gap has min == max.
    """

    kind: PatternKind
    op_mix: OpMix
    txn_count: int
    seed: int = 0
    addr_stride: Optional[int] = None
    addr_mode: AddrMode = AddrMode.SEQUENTIAL
    inter_arrival: Tuple[int, int] = (0, 0)

    @property
    def op(self) -> Op:
        return Op.READ if self.op_mix is OpMix.READ_ONLY else Op.WRITE

    def rng(self, master: int) -> np.random.Generator:
        return np.random.default_rng(np.random.SeedSequence([self.seed, master]))

    def draw_beats(self, rng: np.random.Generator, count: int) -> np.ndarray:
        if self.kind is PatternKind.MIXED:
            return rng.choice(np.array(MIXED_BEATS), size=count)
        return np.full(count, _FIXED_BEATS[self.kind])

    def generate(self, master: int, address_map: AddressMap) -> Tuple[Stimulus, ...]:
        """Full request sequence of ``master``; identical for identical (spec, master)."""
        rng = self.rng(master)
        n = self.txn_count
        beats = self.draw_beats(rng, n)
        lo, hi = self.inter_arrival
        gaps = np.full(n, lo) if lo == hi else rng.integers(lo, hi + 1, size=n)

        bytes_per_beat = address_map.bytes_per_beat
        align = MAX_BURST_BEATS * bytes_per_beat
        span = (ROWS_PER_MASTER - 1) * address_map.row_span
        if self.addr_mode is AddrMode.RANDOM:
            offsets = rng.integers(0, span // align, size=n) * align
        else:
            stride = self.addr_stride if self.addr_stride is not None else align
            if stride <= 0 or stride % bytes_per_beat:
                raise InvalidSpec(f"addr_stride {stride} is not a positive multiple of {bytes_per_beat}")
            offsets = (np.arange(n, dtype=np.int64) * stride) % span

        base = master_base(master, address_map)
        if base + span > address_map.memory_bytes:
            raise InvalidSpec(f"M{master} region does not fit in {address_map.memory_bytes:#x} bytes")
        op = self.op
        return tuple(
            Stimulus(op, base + int(offset), BurstKind.from_beats(int(b)), int(gap))
            for offset, b, gap in zip(offsets, beats, gaps)
        )


def master_base(master: int, address_map: AddressMap) -> int:
    """Start of a master's address region.

    Regions are ``ROWS_PER_MASTER`` rows apart and staggered by one bank, so
    masters start on different banks.
    """
    bank_offset = (master % address_map.banks) * address_map.bank_span
    return bank_offset + master * ROWS_PER_MASTER * address_map.row_span


def make_pattern(
    kind: Union[PatternKind, str],
    op_mix: Union[OpMix, str],
    txn_count: int,
    seed: int = 0,
    addr_stride: Optional[int] = None,
    addr_mode: Union[AddrMode, str] = AddrMode.SEQUENTIAL,
    inter_arrival: Union[int, Tuple[int, int]] = 0,
) -> PatternSpec:
    """Validate arguments and build a PatternSpec.

    Raises:
        InvalidSpec: on unknown kinds, a non-positive txn_count or a bad gap range.
    """
    try:
        kind = PatternKind(kind)
        op_mix = OpMix(op_mix)
        addr_mode = AddrMode(addr_mode)
    except ValueError as exc:
        raise InvalidSpec(str(exc)) from exc
    if txn_count <= 0:
        raise InvalidSpec(f"txn_count must be > 0, got {txn_count}")
    if isinstance(inter_arrival, int):
        inter_arrival = (inter_arrival, inter_arrival)
    lo, hi = inter_arrival
    if lo < 0 or hi < lo:
        raise InvalidSpec(f"bad inter_arrival range {inter_arrival}")
    return PatternSpec(
        kind=kind,
        op_mix=op_mix,
        txn_count=txn_count,
        seed=seed,
        addr_stride=addr_stride,
        addr_mode=addr_mode,
        inter_arrival=(lo, hi),
    )
