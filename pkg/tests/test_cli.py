"""Tests for the command-line interface."""

import json

import pytest
from typer.testing import CliRunner

from ahbplus.cli import app
from ahbplus.cli.run import EXIT_ASSERTION_ABORT, EXIT_ERROR, EXIT_OK
from ahbplus.presets import preset_names

runner = CliRunner()

SMALL = {
    "name": "small",
    "masters": [
        {"pattern": "burst4", "op_mix": "read_only", "txn_count": 8, "count": 2},
        {"pattern": "mixed", "op_mix": "write_only", "txn_count": 8},
    ],
}


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "small.json"
    path.write_text(json.dumps(SMALL))
    return path


def run_cli(*args):
    return runner.invoke(app, ["run", "--log-level", "WARNING", *args])


class TestRun:
    def test_writes_struct_report(self, config_file, tmp_path):
        out = tmp_path / "report.json"
        result = run_cli("--config", str(config_file), "--out", str(out))
        assert result.exit_code == EXIT_OK, result.output
        report = json.loads(out.read_text())
        assert report["summary"]["terminated_reason"] == "AllMastersDone"
        assert report["config"]["name"] == "small"
        assert "cycles/s" in result.output

    def test_same_seed_same_bytes(self, config_file, tmp_path):
        first, second = tmp_path / "a.json", tmp_path / "b.json"
        for out in (first, second):
            result = run_cli("--config", str(config_file), "--seed", "5", "--out", str(out))
            assert result.exit_code == EXIT_OK, result.output
        assert first.read_bytes() == second.read_bytes()

    def test_overrides_are_applied_and_recorded(self, config_file, tmp_path):
        out = tmp_path / "report.json"
        result = run_cli(
            "--config", str(config_file), "--set", "filters.F5=off", "--set", "write_buffer.depth=2",
            "--out", str(out),
        )
        assert result.exit_code == EXIT_OK, result.output
        report = json.loads(out.read_text())
        assert report["overrides"] == ["filters.F5=off", "write_buffer.depth=2"]
        assert report["config"]["filters"]["F5"] is False
        assert report["config"]["write_buffer"]["depth"] == 2
        assert len(report["metrics"]["write_buffer"]["occupancy_histogram"]) == 3

    def test_table_format(self, config_file, tmp_path):
        out = tmp_path / "report.csv"
        result = run_cli("--config", str(config_file), "--format", "table", "--out", str(out))
        assert result.exit_code == EXIT_OK, result.output
        lines = out.read_text().splitlines()
        assert lines[0] == "key,value"
        assert "schema_version,1" in lines

    def test_trace_output(self, config_file, tmp_path):
        out, trace = tmp_path / "report.json", tmp_path / "trace.csv"
        result = run_cli("--config", str(config_file), "--trace", str(trace), "--out", str(out))
        assert result.exit_code == EXIT_OK, result.output
        assert trace.read_text().startswith("cycle,event,master,txn,arg\n")

    def test_preset_with_overrides(self, tmp_path):
        out = tmp_path / "report.json"
        result = run_cli("--preset", "read-single", "--set", "masters.0.txn_count=3", "--out", str(out))
        assert result.exit_code == EXIT_OK, result.output
        report = json.loads(out.read_text())
        assert report["summary"]["completed_transactions"] == 36

    def test_default_report_path(self, config_file, tmp_path, monkeypatch):
        monkeypatch.setenv("AHBPLUS_OUTPUT_DIR", str(tmp_path / "out"))
        result = run_cli("--config", str(config_file))
        assert result.exit_code == EXIT_OK, result.output
        assert (tmp_path / "out" / "small.json").exists()

    def test_fault_exits_with_abort_code(self, config_file, tmp_path):
        out = tmp_path / "report.json"
        result = run_cli(
            "--config", str(config_file), "--set", "checker.fault.rule=write-buffer-fifo", "--out", str(out)
        )
        assert result.exit_code == EXIT_ASSERTION_ABORT, result.output
        report = json.loads(out.read_text())
        assert report["summary"]["terminated_reason"] == "AssertionAbort"
        assert report["violations"][0]["rule"] == "write-buffer-fifo"
        assert report["fault"]["applied_at"] == 0

    @pytest.mark.parametrize(
        "args",
        [
            [],
            ["--preset", "read-single", "--config", "x.json"],
            ["--preset", "read-burst16"],
            ["--config", "does-not-exist.json"],
            ["--preset", "read-single", "--format", "yaml"],
            ["--preset", "read-single", "--set", "bus.turbo=on"],
            ["--preset", "read-single", "--set", "filters.F7=off"],
            ["--preset", "read-single", "--log-scope", "bus-matrix"],
        ],
    )
    def test_usage_errors(self, args):
        assert run_cli(*args).exit_code == EXIT_ERROR

    def test_log_file(self, config_file, tmp_path):
        log_file = tmp_path / "run.log"
        result = run_cli(
            "--config", str(config_file), "--out", str(tmp_path / "r.json"), "--log-file", str(log_file),
            "--log-level", "INFO",
        )
        assert result.exit_code == EXIT_OK, result.output
        entries = [json.loads(line) for line in log_file.read_text().splitlines()]
        assert entries[0]["message"] == "Run start"
        assert entries[-1]["message"] == "Operation completed: simulation"
        assert {entry["level"] for entry in entries} == {"INFO"}

    def test_malformed_config(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"masters": [}')
        result = run_cli("--config", str(path))
        assert result.exit_code == EXIT_ERROR
        assert "line 1" in result.output


class TestPresetsCommands:
    def test_list(self):
        result = runner.invoke(app, ["presets", "list"])
        assert result.exit_code == 0
        for name in preset_names():
            assert name in result.output

    def test_show_is_a_runnable_config(self, tmp_path):
        result = runner.invoke(app, ["presets", "show", "qos-stress"])
        assert result.exit_code == 0
        resolved = json.loads(result.output)
        assert resolved["masters"][0]["rt"] is True
        resolved["masters"][0]["txn_count"] = 2
        resolved["masters"][1]["txn_count"] = 2
        path = tmp_path / "qos.json"
        path.write_text(json.dumps(resolved))
        out = tmp_path / "report.json"
        run = run_cli("--config", str(path), "--out", str(out))
        assert run.exit_code == EXIT_OK, run.output
        assert json.loads(out.read_text())["config"] == resolved

    def test_show_unknown(self):
        assert runner.invoke(app, ["presets", "show", "nope"]).exit_code == 1
