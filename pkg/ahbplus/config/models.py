"""Simulation config schema.

Every section rejects unknown keys. Defaults are filled on validation and
echoed into reports through :meth:`SimConfig.resolved`.
"""

from typing import Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ahbplus.bus.config import BusConfig
from ahbplus.checker.rules import rule_names
from ahbplus.constants import (
    CONFIG_VERSION,
    DEFAULT_BANK_BITS,
    DEFAULT_COL_BITS,
    DEFAULT_QOS_URGENCY_THRESHOLD,
    DEFAULT_ROW_BITS,
    DEFAULT_TCL,
    DEFAULT_TRAS,
    DEFAULT_TRCD,
    DEFAULT_TRP,
    DEFAULT_TXN_COUNT,
    DEFAULT_WRITE_BUFFER_DEPTH,
    NUM_FILTERS,
)
from ahbplus.ddrc.address_map import AddressMap
from ahbplus.ddrc.timing import DdrTiming
from ahbplus.masters.pattern import PatternSpec, make_pattern
from ahbplus.types import AddrMode, OpMix, PatternKind, ReportFormat

DEFAULT_MAX_CYCLES = 2_000_000


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class BusSection(_Section):
    bus_width_bits: Literal[32, 64, 128] = 64
    ddrc_credits: int = Field(default=1, ge=1)
    next_info_hints: bool = True
    rr_pointer_init: Optional[int] = Field(default=None, ge=0)


class WriteBufferSection(_Section):
    enabled: bool = True
    depth: int = Field(default=DEFAULT_WRITE_BUFFER_DEPTH, ge=0)

    @model_validator(mode="after")
    def _depth_when_enabled(self) -> "WriteBufferSection":
        if self.enabled and self.depth < 1:
            raise ValueError("depth must be >= 1 when the write buffer is enabled")
        return self


class FiltersSection(_Section):
    """On/off switch per filter plus the filter parameters.

    F1 (request valid) and F7 (round robin) keep the chain well formed and
    cannot be switched off.
    """

    F1: bool = True
    F2: bool = True
    F3: bool = True
    F4: bool = True
    F5: bool = True
    F6: bool = True
    F7: bool = True
    qos_urgency_threshold: int = Field(default=DEFAULT_QOS_URGENCY_THRESHOLD, ge=0)
    static_priority: Dict[int, int] = Field(default_factory=dict)

    @field_validator("F1", "F7")
    @classmethod
    def _always_on(cls, value: bool) -> bool:
        if not value:
            raise ValueError("this filter is always enabled")
        return value

    @property
    def flags(self) -> Tuple[bool, ...]:
        return tuple(getattr(self, f"F{index}") for index in range(1, NUM_FILTERS + 1))


class DdrSection(_Section):
    tRCD: int = Field(default=DEFAULT_TRCD, ge=1)
    tRP: int = Field(default=DEFAULT_TRP, ge=1)
    tCL: int = Field(default=DEFAULT_TCL, ge=1)
    tRAS: int = Field(default=DEFAULT_TRAS, ge=1)
    col_bits: int = Field(default=DEFAULT_COL_BITS, ge=3)
    bank_bits: int = Field(default=DEFAULT_BANK_BITS, ge=0)
    row_bits: int = Field(default=DEFAULT_ROW_BITS, ge=1)
    functional_memory: bool = False

    @model_validator(mode="after")
    def _tras_covers_trcd(self) -> "DdrSection":
        if self.tRAS < self.tRCD:
            raise ValueError(f"tRAS ({self.tRAS}) must be >= tRCD ({self.tRCD})")
        return self


class MasterSection(_Section):
    """One master class; ``count`` replicates it with consecutive ids."""

    pattern: PatternKind = PatternKind.BURST4
    op_mix: OpMix = OpMix.READ_ONLY
    rt: bool = False
    qos_objective: int = Field(default=0, ge=0)
    txn_count: int = Field(default=DEFAULT_TXN_COUNT, gt=0)
    addr_stride: Optional[int] = Field(default=None, gt=0)
    addr_mode: AddrMode = AddrMode.SEQUENTIAL
    inter_arrival: Union[int, Tuple[int, int]] = 0
    count: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _rt_needs_objective(self) -> "MasterSection":
        if self.rt and self.qos_objective <= 0:
            raise ValueError("a real-time master needs qos_objective > 0")
        gap = self.inter_arrival
        lo, hi = (gap, gap) if isinstance(gap, int) else gap
        if lo < 0 or hi < lo:
            raise ValueError(f"bad inter_arrival {gap}")
        return self

    def pattern_spec(self, seed: int) -> PatternSpec:
        return make_pattern(
            self.pattern,
            self.op_mix,
            self.txn_count,
            seed=seed,
            addr_stride=self.addr_stride,
            addr_mode=self.addr_mode,
            inter_arrival=self.inter_arrival,
        )


class RunSection(_Section):
    max_cycles: int = Field(default=DEFAULT_MAX_CYCLES, gt=0)
    seed: int = Field(default=0, ge=0)
    stop_when_idle: bool = True


class FaultSection(_Section):
    rule: str
    cycle: int = Field(default=0, ge=0)

    @field_validator("rule")
    @classmethod
    def _known_rule(cls, value: str) -> str:
        if value not in rule_names():
            raise ValueError(f"unknown checker rule '{value}'")
        return value


class CheckerSection(_Section):
    enabled: bool = True
    starvation_bound: Optional[int] = Field(default=None, gt=0)
    disabled_rules: List[str] = Field(default_factory=list)
    fault: Optional[FaultSection] = None

    @field_validator("disabled_rules")
    @classmethod
    def _known_rules(cls, value: List[str]) -> List[str]:
        unknown = [name for name in value if name not in rule_names()]
        if unknown:
            raise ValueError(f"unknown checker rules {unknown}")
        return value


class OutputsSection(_Section):
    format: ReportFormat = ReportFormat.STRUCT
    trace: bool = False
    trace_path: Optional[str] = None
    report_path: Optional[str] = None


class SimConfig(_Section):
    """Complete, validated simulation config."""

    version: Literal[1] = CONFIG_VERSION
    name: Optional[str] = None
    bus: BusSection = Field(default_factory=BusSection)
    write_buffer: WriteBufferSection = Field(default_factory=WriteBufferSection)
    filters: FiltersSection = Field(default_factory=FiltersSection)
    ddr: DdrSection = Field(default_factory=DdrSection)
    masters: List[MasterSection] = Field(min_length=1)
    run: RunSection = Field(default_factory=RunSection)
    checker: CheckerSection = Field(default_factory=CheckerSection)
    outputs: OutputsSection = Field(default_factory=OutputsSection)

    def master_list(self) -> List[MasterSection]:
        """Master entries with ``count`` expanded, in id order."""
        return [entry for entry in self.masters for _ in range(entry.count)]

    @property
    def master_count(self) -> int:
        return sum(entry.count for entry in self.masters)

    def bus_config(self) -> BusConfig:
        return BusConfig(
            bus_width_bits=self.bus.bus_width_bits,
            filter_enabled=self.filters.flags,
            rr_pointer_init=self.bus.rr_pointer_init,
            qos_urgency_threshold=self.filters.qos_urgency_threshold,
            static_priority=tuple(sorted(self.filters.static_priority.items())),
            write_buffer_enabled=self.write_buffer.enabled,
            write_buffer_depth=self.write_buffer.depth,
            next_info_hints=self.bus.next_info_hints,
            ddrc_credits=self.bus.ddrc_credits,
        )

    def ddr_timing(self) -> DdrTiming:
        ddr = self.ddr
        return DdrTiming(tRCD=ddr.tRCD, tRP=ddr.tRP, tCL=ddr.tCL, tRAS=ddr.tRAS)

    def address_map(self) -> AddressMap:
        ddr = self.ddr
        return AddressMap.for_bus(
            self.bus.bus_width_bits,
            col_bits=ddr.col_bits,
            bank_bits=ddr.bank_bits,
            row_bits=ddr.row_bits,
        )

    def resolved(self) -> dict:
        """The full config, defaults included, as plain JSON data."""
        return self.model_dump(mode="json")
