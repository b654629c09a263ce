"""Tests for profiling events, the accumulator and the CSV trace."""

import pytest

from ahbplus.errors import SimulationPreconditionError, ZeroCycles
from ahbplus.profiling import ProfileAccumulator, finalize, read_trace
from ahbplus.profiling.events import EventKind, ProfileEvent, command_arg, split_command_arg
from ahbplus.profiling.trace import TRACE_HEADER, recount_bytes, recount_utilization
from ahbplus.simulation import build_platform, run_simulation

from tests.conftest import make_config, run_config


def event(cycle, kind, master=None, txn=None, arg=None):
    return ProfileEvent(cycle, kind, master, txn, arg)


class TestAccumulator:
    def test_utilization_counts_beat_cycles(self):
        acc = ProfileAccumulator(n_masters=1, bus_bytes=8)
        acc.record(event(0, EventKind.BEAT_DELIVERED, 0, 1, 0))
        acc.record(event(1, EventKind.BEAT_DELIVERED, 0, 1, 1))
        report = finalize(acc, 4)
        assert report.utilization == 0.5
        assert report.beats_delivered == 2
        assert report.bytes_delivered == 16

    def test_contention_counts_waiting_requesters(self):
        acc = ProfileAccumulator(n_masters=3, bus_bytes=8)
        for master in range(3):
            acc.record(event(0, EventKind.REQUEST_PENDING, master))
        acc.record(event(0, EventKind.GRANTED, 0, 1, 1))
        for master in (1, 2):
            acc.record(event(1, EventKind.REQUEST_PENDING, master))
        assert finalize(acc, 2).contention == 2.0

    def test_zero_cycles(self):
        with pytest.raises(ZeroCycles):
            finalize(ProfileAccumulator(n_masters=1, bus_bytes=8), 0)

    def test_events_must_not_go_back_in_time(self):
        acc = ProfileAccumulator(n_masters=1, bus_bytes=8)
        acc.record(event(5, EventKind.BUFFER_OCCUPANCY, arg=0))
        with pytest.raises(SimulationPreconditionError):
            acc.record(event(4, EventKind.BUFFER_OCCUPANCY, arg=0))

    def test_posted_write_counts_bytes_and_latency(self):
        acc = ProfileAccumulator(n_masters=2, bus_bytes=8, wb_depth=2)
        acc.record(event(3, EventKind.WRITE_POSTED, 1, 77, 4))
        acc.record(event(3, EventKind.TXN_COMPLETED, 1, 77, 2))
        master = finalize(acc, 10).master(1)
        assert master.bytes == 32
        assert master.completed == 1
        assert master.grant_latency_max == 2
        assert master.completion_latency_mean == 2.0
        assert master.throughput == pytest.approx(3.2)

    def test_drained_posted_write_leaves_nothing_open(self):
        acc = ProfileAccumulator(n_masters=2, bus_bytes=8, wb_depth=2)
        acc.record(event(3, EventKind.WRITE_POSTED, 1, 77, 2))
        acc.record(event(3, EventKind.TXN_COMPLETED, 1, 77, 2))
        assert acc.open_txns == 1
        acc.record(event(9, EventKind.BEAT_DELIVERED, 1, 77, 0))
        acc.record(event(10, EventKind.BEAT_DELIVERED, 1, 77, 1))
        assert acc.open_txns == 0
        assert finalize(acc, 11).master(1).bytes == 16

    def test_row_hit_ratio(self):
        acc = ProfileAccumulator(n_masters=1, bus_bytes=8)
        acc.record(event(0, EventKind.COMMAND, arg=command_arg("Activate", 0)))
        acc.record(event(3, EventKind.COMMAND, txn=1, arg=command_arg("ColRead", 0)))
        acc.record(event(6, EventKind.COMMAND, txn=2, arg=command_arg("ColRead", 0)))
        report = finalize(acc, 10)
        assert report.row_hit_ratio == 0.5
        assert report.command_counts == {"Activate": 1, "ColRead": 2}

    def test_occupancy_histogram(self):
        acc = ProfileAccumulator(n_masters=1, bus_bytes=8, wb_depth=2)
        for cycle, level in enumerate((0, 1, 1, 2)):
            acc.record(event(cycle, EventKind.BUFFER_OCCUPANCY, arg=level))
        assert finalize(acc, 4).buffer_occupancy_histogram == (1, 2, 1)

    def test_latency_statistics(self):
        acc = ProfileAccumulator(n_masters=1, bus_bytes=8)
        for index, latency in enumerate(range(1, 21)):
            acc.record(event(index, EventKind.TXN_COMPLETED, 0, index, latency))
        master = finalize(acc, 40).master(0)
        assert master.completion_latency_mean == 10.5
        assert master.completion_latency_max == 20
        assert master.completion_latency_p95 == pytest.approx(19.05)


class TestEvents:
    def test_row_conversion(self):
        original = event(12, EventKind.GRANTED, 3, 0x300000002, 4)
        assert ProfileEvent.from_row(original.to_row()) == original

    def test_command_arg_stays_text(self):
        original = event(2, EventKind.COMMAND, arg=command_arg("Precharge", 3))
        restored = ProfileEvent.from_row(original.to_row())
        assert split_command_arg(restored.arg) == ("Precharge", 3)


class TestRunMetrics:
    def test_single_read(self):
        metrics = run_config().metrics
        assert metrics.total_cycles == 10
        assert metrics.utilization == pytest.approx(0.1)
        assert metrics.contention == 0.0
        master = metrics.master(0)
        assert master.completed == 1
        assert master.bytes == 8
        assert master.grant_latency_max == 1
        assert master.completion_latency_max == 8
        assert metrics.command_counts == {"Activate": 1, "ColRead": 1}

    def test_qos_violations_match_bus_registers(self):
        masters = [
            {"pattern": "burst8", "txn_count": 20, "rt": True, "qos_objective": 5},
            {"pattern": "burst8", "txn_count": 20, "count": 5},
        ]
        result = run_config(masters, filters={"F3": False})
        bus = result.platform.bus
        for master in range(6):
            assert result.metrics.master(master).qos_violations == bus.qos_record(master).violations
        assert result.metrics.master(0).rt
        assert result.metrics.master(0).objective == 5

    def test_completed_bytes_match_delivered_bytes(self, mixed_traffic):
        result = run_config(mixed_traffic)
        assert result.summary.terminated_reason.value == "AllMastersDone"
        assert result.metrics.write_buffer_posted > 0
        assert result.metrics.completed_bytes == result.metrics.bytes_delivered
        assert result.platform.profiler.accumulator.open_txns == 0

    def test_folded_totals_match_recorded_events(self, mixed_traffic):
        config = make_config(mixed_traffic)
        reports = []
        for keep_events in (False, True):
            platform = build_platform(config, keep_events=keep_events)
            summary = platform.world.run(config.run.max_cycles, stop_when_idle=True)
            reports.append(platform.profiler.report(summary.total_cycles))
        assert reports[0] == reports[1]
        assert reports[0].contention > 0


class TestTrace:
    def test_trace_recount_matches_report(self, tmp_path, mixed_traffic):
        path = tmp_path / "trace.csv"
        result = run_simulation(make_config(mixed_traffic), trace_path=path)
        assert path.read_text().splitlines()[0] == ",".join(TRACE_HEADER)
        events = read_trace(path)
        total = result.summary.total_cycles
        assert recount_utilization(events, total) == pytest.approx(result.metrics.utilization)
        assert recount_bytes(events, 8) == result.metrics.bytes_delivered

    def test_rejects_foreign_csv(self, tmp_path):
        path = tmp_path / "other.csv"
        path.write_text("a,b\n1,2\n")
        with pytest.raises(ValueError):
            read_trace(path)
