"""Tests for address decoding, bank FSMs and the DDR command scheduler."""

import pytest

from ahbplus.classes import NextTxnInfo, Transaction, make_txn_id
from ahbplus.ddrc import (
    ActiveBurst,
    AddressMap,
    BankState,
    DdrTiming,
    FunctionalMemory,
    QueuedTxn,
    bank_step,
    decode_address,
    deliver_beats,
    idle_bank_report,
    normalize,
    schedule_command,
)
from ahbplus.ddrc.commands import activate, col_read, col_write, precharge
from ahbplus.errors import AddressOutOfRange, IllegalCommand, InvalidSpec
from ahbplus.types import BankPhase, BurstKind, CommandKind, Op


def read(addr=0, burst=BurstKind.SINGLE, txn_id=1, master=0):
    return Transaction(id=txn_id, master=master, op=Op.READ, addr=addr, burst=burst)


def queued(txn, address_map):
    row, bank, col = address_map.decode(txn.addr)
    return QueuedTxn(txn, row, bank, col)


class TestAddressMap:
    def test_geometry_for_64_bit_bus(self, address_map):
        assert address_map.beat_offset_bits == 3
        assert address_map.banks == 4
        assert address_map.bank_span == 2048
        assert address_map.row_span == 8192
        assert address_map.memory_bytes == 64 * 1024 * 1024

    def test_decode_fields(self, address_map):
        addr = address_map.encode(row=5, bank=2, col=17)
        assert decode_address(addr, address_map) == (5, 2, 17)

    def test_consecutive_bank_spans_walk_banks(self, address_map):
        banks = [address_map.decode(i * address_map.bank_span).bank for i in range(6)]
        assert banks == [0, 1, 2, 3, 0, 1]

    @pytest.mark.parametrize("addr", [-8, 64 * 1024 * 1024])
    def test_out_of_range(self, address_map, addr):
        with pytest.raises(AddressOutOfRange):
            address_map.decode(addr)

    def test_bus_width_sets_beat_offset(self):
        assert AddressMap.for_bus(32).beat_offset_bits == 2
        assert AddressMap.for_bus(128).beat_offset_bits == 4

    def test_negative_width_rejected(self):
        with pytest.raises(InvalidSpec):
            AddressMap(col_bits=-1)


class TestTiming:
    def test_tras_below_trcd_rejected(self):
        with pytest.raises(InvalidSpec):
            DdrTiming(tRCD=5, tRAS=4)

    def test_zero_rejected(self):
        with pytest.raises(InvalidSpec):
            DdrTiming(tCL=0)

    def test_data_lead(self, timing):
        assert timing.data_lead(True) == timing.tCL
        assert timing.data_lead(False) == 1


class TestBankFsm:
    def test_activate_then_active(self, timing):
        bank = bank_step(BankState(), activate(0, 7), timing, 10)
        assert bank.phase is BankPhase.ACTIVATING
        assert normalize(bank, 12).phase is BankPhase.ACTIVATING
        settled = normalize(bank, 10 + timing.tRCD)
        assert settled.phase is BankPhase.ACTIVE
        assert settled.row == 7
        assert settled.active_since == 10

    def test_column_read_bursts_then_returns_to_active(self, timing):
        bank = normalize(bank_step(BankState(), activate(0, 1), timing, 0), timing.tRCD)
        burst = bank_step(bank, col_read(0, 1, 0, 4, 9), timing, 3)
        assert burst.phase is BankPhase.BURSTING
        assert burst.until == 3 + timing.tCL + 4
        assert burst.txn_id == 9
        assert normalize(burst, burst.until).phase is BankPhase.ACTIVE

    def test_precharge_honours_tras(self, timing):
        bank = normalize(bank_step(BankState(), activate(0, 1), timing, 0), timing.tRCD)
        with pytest.raises(IllegalCommand):
            bank_step(bank, precharge(0), timing, timing.tRAS - 1)
        closed = bank_step(bank, precharge(0), timing, timing.tRAS)
        assert closed.phase is BankPhase.PRECHARGING
        assert normalize(closed, timing.tRAS + timing.tRP) == BankState()

    def test_activate_on_open_bank_is_illegal(self, timing):
        bank = bank_step(BankState(), activate(0, 1), timing, 0)
        with pytest.raises(IllegalCommand) as info:
            bank_step(bank, activate(0, 2), timing, 1)
        assert info.value.bank == 0

    def test_column_on_wrong_row_is_illegal(self, timing):
        bank = normalize(bank_step(BankState(), activate(0, 1), timing, 0), timing.tRCD)
        with pytest.raises(IllegalCommand):
            bank_step(bank, col_write(0, 2, 0, 1, 3), timing, timing.tRCD)

    def test_column_on_idle_bank_is_illegal(self, timing):
        with pytest.raises(IllegalCommand):
            bank_step(BankState(), col_read(0, 0, 0, 1, 3), timing, 0)

    def test_nop_only_advances_time(self, timing):
        bank = bank_step(BankState(), activate(0, 1), timing, 0)
        assert bank_step(bank, None, timing, timing.tRCD).phase is BankPhase.ACTIVE


class TestBankReport:
    def test_blocked_while_bursting(self, timing):
        bursting = BankState(BankPhase.BURSTING, row=0, until=20, active_since=0, txn_id=1)
        report = idle_bank_report((bursting, BankState()), 5)
        assert report[0].blocked and not report[0].idle
        assert report[1].idle and not report[1].blocked

    def test_reserved_row_is_expected_row(self):
        active = BankState(BankPhase.ACTIVE, row=3, active_since=0)
        report = idle_bank_report((active,), 10, reserved_rows=(8,))
        assert report[0].open_row == 3
        assert report[0].expected_row == 8
        assert not report[0].idle


class TestScheduler:
    def banks(self, *states):
        return tuple(states) + (BankState(),) * (4 - len(states))

    def test_activate_for_demand(self, address_map, timing):
        txn = read(address_map.encode(4, 1))
        cmd = schedule_command((queued(txn, address_map),), (None,) * 4, self.banks(), timing, 0)
        assert cmd == activate(1, 4)

    def test_column_beats_activate(self, address_map, timing):
        hit = read(address_map.encode(2, 0), txn_id=1)
        miss = read(address_map.encode(5, 1), txn_id=2)
        banks = self.banks(BankState(BankPhase.ACTIVE, row=2, active_since=0))
        queue = (queued(miss, address_map), queued(hit, address_map))
        cmd = schedule_command(queue, (None,) * 4, banks, timing, 5)
        assert cmd.kind is CommandKind.COL_READ
        assert cmd.txn_id == 1

    def test_column_waits_for_data_bus(self, address_map, timing):
        hit = read(address_map.encode(2, 0))
        banks = self.banks(BankState(BankPhase.ACTIVE, row=2, active_since=0))
        cmd = schedule_command((queued(hit, address_map),), (None,) * 4, banks, timing, 5, 20)
        assert cmd.is_nop

    def test_precharge_on_row_conflict_after_tras(self, address_map, timing):
        conflict = read(address_map.encode(9, 0))
        banks = self.banks(BankState(BankPhase.ACTIVE, row=2, active_since=0))
        queue = (queued(conflict, address_map),)
        assert schedule_command(queue, (None,) * 4, banks, timing, timing.tRAS - 1).is_nop
        assert schedule_command(queue, (None,) * 4, banks, timing, timing.tRAS) == precharge(0)

    def test_demand_before_hint(self, address_map, timing):
        txn = read(address_map.encode(1, 3))
        hint = NextTxnInfo(bank=0, row=6, op=Op.READ, master=1, txn_id=7)
        cmd = schedule_command((queued(txn, address_map),), (hint, None, None, None), self.banks(), timing, 0)
        assert cmd == activate(3, 1)

    def test_hint_opens_idle_bank(self, timing):
        hint = NextTxnInfo(bank=2, row=6, op=Op.READ, master=1, txn_id=7)
        cmd = schedule_command((), (None, None, hint, None), self.banks(), timing, 0)
        assert cmd == activate(2, 6)

    def test_hint_opens_idle_bank_during_another_burst(self, timing):
        bursting = BankState(BankPhase.BURSTING, row=2, until=20, active_since=0, txn_id=3)
        hint = NextTxnInfo(bank=2, row=6, op=Op.READ, master=1, txn_id=7)
        cmd = schedule_command((), (None, None, hint, None), self.banks(bursting), timing, 12)
        assert cmd == activate(2, 6)

    def test_hint_closes_conflicting_row(self, timing):
        hint = NextTxnInfo(bank=0, row=6, op=Op.READ, master=1, txn_id=7)
        banks = self.banks(BankState(BankPhase.ACTIVE, row=2, active_since=0))
        cmd = schedule_command((), (hint, None, None, None), banks, timing, timing.tRAS)
        assert cmd == precharge(0)

    def test_nothing_to_do(self, timing):
        assert schedule_command((), (None,) * 4, self.banks(), timing, 0).is_nop


class TestBeatDelivery:
    def test_burst_beats_and_completion(self):
        txn = read(addr=64, burst=BurstKind.INCR4)
        bursts = (ActiveBurst(txn, first_beat=10),)
        beats, done, remaining = deliver_beats(bursts, 9, 8)
        assert beats == [] and done == [] and remaining == list(bursts)
        beats, done, remaining = deliver_beats(bursts, 12, 8)
        assert beats[0].index == 2
        assert beats[0].addr == 64 + 16
        assert done == []
        beats, done, remaining = deliver_beats(bursts, 13, 8)
        assert done[0].first_data_cycle == 10
        assert done[0].done_cycle == 13
        assert remaining == []


class TestFunctionalMemory:
    def test_written_cell_checks_clean(self):
        memory = FunctionalMemory()
        memory.write(make_txn_id(2, 7), 0x40)
        assert memory.check(0x40) is None
        assert memory.check(0x48) is None
        assert len(memory) == 1

    def test_cell_remembers_last_writer(self):
        memory = FunctionalMemory()
        memory.write(make_txn_id(1, 0), 0x40)
        memory.write(make_txn_id(2, 3), 0x40)
        assert memory.writer(0x40) == make_txn_id(2, 3)
        assert memory.writer(0x48) is None
        assert memory.check(0x40) is None

    def test_corrupted_cell_reports_token(self):
        memory = FunctionalMemory()
        memory.corrupt(0x40, 0x48)
        assert memory.check(0x40) == 0x48
