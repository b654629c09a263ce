"""Tests for report assembly, formatters and the report schema."""

import json

import pytest

from ahbplus.errors import UnknownFormat
from ahbplus.formatters import JSONFormatter, TableFormatter, get_formatter
from ahbplus.formatters.table_formatter import flatten, split_key
from ahbplus.schema import REPORT_SCHEMA, SchemaValidationError, validate_report

from tests.conftest import run_config


@pytest.fixture(scope="module")
def report():
    masters = [
        {"pattern": "burst4", "op_mix": "read_only", "txn_count": 6, "count": 2},
        {"pattern": "single", "op_mix": "write_only", "txn_count": 6},
    ]
    return run_config(masters).to_report()


class TestFormatters:
    def test_lookup(self):
        assert isinstance(get_formatter("struct"), JSONFormatter)
        assert isinstance(get_formatter("table"), TableFormatter)
        with pytest.raises(UnknownFormat):
            get_formatter("yaml")

    def test_struct_output_is_stable(self, report):
        formatter = JSONFormatter()
        text = formatter.format(report)
        assert text.endswith("}\n")
        assert formatter.parse(text) == json.loads(json.dumps(report))
        assert formatter.format(formatter.parse(text)) == text

    def test_table_keys(self):
        rows = dict(flatten({"metrics": {"masters": [{"bytes": 8}], "write_buffer": {"posted": 0}}}))
        assert rows == {"metrics.masters[0].bytes": 8, "metrics.write_buffer.posted": 0}
        assert split_key("metrics.masters[3].throughput") == ["metrics", "masters", 3, "throughput"]

    def test_table_parses_back_to_the_struct_report(self, report):
        formatter = TableFormatter()
        text = formatter.format(report)
        assert text.splitlines()[0] == "key,value"
        assert "metrics.masters[2].completed,6" in text.splitlines()
        assert formatter.parse(text) == json.loads(json.dumps(report))

    def test_table_rejects_foreign_text(self):
        with pytest.raises(ValueError):
            TableFormatter().parse("a,b\n")


class TestReportSchema:
    def test_run_report_is_valid(self, report):
        assert validate_report(report)
        assert report["schema_version"] == 1
        assert set(report) == set(REPORT_SCHEMA["properties"])

    def test_report_has_no_wall_clock_data(self, report):
        text = json.dumps(report)
        assert "elapsed" not in text
        assert "cycles_per_second" not in text

    def test_missing_section(self, report):
        broken = {key: value for key, value in report.items() if key != "metrics"}
        with pytest.raises(SchemaValidationError):
            validate_report(broken)

    def test_bad_value_reports_path(self, report):
        broken = json.loads(json.dumps(report))
        broken["metrics"]["utilization"] = 1.5
        with pytest.raises(SchemaValidationError) as info:
            validate_report(broken)
        assert info.value.path == "metrics/utilization"

    def test_unknown_top_level_key(self, report):
        with pytest.raises(SchemaValidationError):
            validate_report({**report, "wall_clock": 1.0})
