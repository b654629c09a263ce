"""Tests for config parsing, validation, overrides and presets."""

import json

import pytest

from ahbplus.config import (
    DEFAULT_MAX_CYCLES,
    apply_overrides,
    load_config,
    parse_config,
    parse_override_value,
    validate_config,
)
from ahbplus.errors import ConfigParseError, ConfigValidationError, InvalidSpec
from ahbplus.presets import describe_preset, load_preset, preset_document, preset_names
from ahbplus.types import OpMix, PatternKind, ReportFormat

MINIMAL = {"masters": [{"pattern": "single"}]}


class TestDefaults:
    def test_minimal_document(self):
        config = validate_config(MINIMAL)
        assert config.bus.bus_width_bits == 64
        assert config.bus.ddrc_credits == 1
        assert config.write_buffer.enabled and config.write_buffer.depth == 4
        assert config.filters.flags == (True,) * 7
        assert (config.ddr.tRCD, config.ddr.tRP, config.ddr.tCL, config.ddr.tRAS) == (3, 3, 3, 7)
        assert config.run.max_cycles == DEFAULT_MAX_CYCLES
        assert config.run.seed == 0
        assert config.masters[0].txn_count == 200
        assert config.masters[0].op_mix is OpMix.READ_ONLY
        assert config.outputs.format is ReportFormat.STRUCT

    def test_resolved_echoes_defaults(self):
        resolved = validate_config(MINIMAL).resolved()
        assert resolved["ddr"]["tRAS"] == 7
        assert resolved["masters"][0]["pattern"] == "single"
        json.dumps(resolved)

    def test_derived_objects(self):
        config = validate_config(
            {**MINIMAL, "bus": {"bus_width_bits": 128}, "filters": {"F5": False, "static_priority": {"0": 2}}}
        )
        bus = config.bus_config()
        assert bus.bus_bytes == 16
        assert not bus.filter_on(5)
        assert bus.rank(0) == 2
        assert config.address_map().beat_offset_bits == 4
        assert config.ddr_timing().tCL == 3

    def test_count_expands_masters(self):
        config = validate_config(
            {"masters": [{"pattern": "burst4", "count": 3}, {"pattern": "single", "op_mix": "write_only"}]}
        )
        assert config.master_count == 4
        assert [m.pattern for m in config.master_list()] == [PatternKind.BURST4] * 3 + [PatternKind.SINGLE]


class TestValidation:
    @pytest.mark.parametrize(
        "document, field",
        [
            ({**MINIMAL, "write_buffer": {"depth": 0}}, "write_buffer"),
            ({**MINIMAL, "bus": {"bus_width_bits": 48}}, "bus.bus_width_bits"),
            ({**MINIMAL, "bus": {"turbo": True}}, "bus.turbo"),
            ({**MINIMAL, "filters": {"F1": False}}, "filters.F1"),
            ({**MINIMAL, "filters": {"F7": False}}, "filters.F7"),
            ({**MINIMAL, "ddr": {"tRCD": 8, "tRAS": 4}}, "ddr"),
            ({"masters": [{"rt": True}]}, "masters.0"),
            ({"masters": [{"txn_count": 0}]}, "masters.0.txn_count"),
            ({"masters": []}, "masters"),
            ({}, "masters"),
            ({**MINIMAL, "checker": {"disabled_rules": ["bus-parity"]}}, "checker.disabled_rules"),
            ({**MINIMAL, "checker": {"fault": {"rule": "bus-parity"}}}, "checker.fault.rule"),
            ({**MINIMAL, "version": 2}, "version"),
        ],
    )
    def test_rejected(self, document, field):
        with pytest.raises(ConfigValidationError) as info:
            validate_config(document)
        assert info.value.field == field

    def test_disabled_buffer_may_be_empty(self):
        config = validate_config({**MINIMAL, "write_buffer": {"enabled": False, "depth": 0}})
        assert not config.bus_config().write_buffer_enabled


class TestParsing:
    def test_parse_error_position(self):
        with pytest.raises(ConfigParseError) as info:
            parse_config('{\n  "masters": [\n    {"pattern": "single",}\n  ]\n}')
        assert info.value.line == 3
        assert info.value.column > 1

    def test_top_level_must_be_object(self):
        with pytest.raises(ConfigParseError) as info:
            parse_config("[1, 2]")
        assert (info.value.line, info.value.column) == (1, 1)

    def test_non_utf8_bytes(self):
        with pytest.raises(ConfigParseError):
            parse_config(b'{"name": "\xff"}')

    def test_parse_bytes(self):
        assert parse_config(json.dumps(MINIMAL).encode()).masters[0].pattern is PatternKind.SINGLE


class TestOverrides:
    @pytest.mark.parametrize(
        "raw, value",
        [("on", True), ("OFF", False), ("12", 12), ("[1, 4]", [1, 4]), ("null", None), ("burst8", "burst8")],
    )
    def test_value_parsing(self, raw, value):
        assert parse_override_value(raw) == value

    def test_nested_and_indexed_paths(self):
        data = apply_overrides(MINIMAL, ["filters.F5=off", "masters.0.rt=true", "masters.0.qos_objective=40"])
        assert data["filters"] == {"F5": False}
        assert data["masters"][0] == {"pattern": "single", "rt": True, "qos_objective": 40}
        assert "filters" not in MINIMAL

    @pytest.mark.parametrize("override", ["filters.F5", "=3", "masters.3.rt=on", "masters.x.rt=on", "run.seed.x=1"])
    def test_malformed(self, override):
        with pytest.raises(ConfigValidationError):
            apply_overrides({**MINIMAL, "run": {"seed": 1}}, [override])

    def test_load_config_from_file(self, tmp_path):
        path = tmp_path / "sim.json"
        path.write_text(json.dumps({**MINIMAL, "run": {"seed": 3}}))
        config = load_config(path, ["write_buffer.depth=8"], seed=11, max_cycles=500)
        assert config.write_buffer.depth == 8
        assert config.run.seed == 11
        assert config.run.max_cycles == 500

    def test_override_error_names_field(self):
        with pytest.raises(ConfigValidationError) as info:
            load_config(dict(MINIMAL), ["bus.ddrc_credits=0"])
        assert info.value.field == "bus.ddrc_credits"


class TestPresets:
    def test_catalog(self):
        names = preset_names()
        assert len(names) == 14
        for mix in ("read", "write", "rw"):
            for pattern in ("single", "burst4", "burst8", "mixed"):
                assert f"{mix}-{pattern}" in names
        assert {"single-master", "qos-stress"} <= set(names)

    @pytest.mark.parametrize("name", ["read-single", "write-burst8", "rw-mixed", "qos-stress", "single-master"])
    def test_presets_validate(self, name):
        config = load_preset(name)
        assert config.name == name
        assert describe_preset(name)

    def test_rw_mix(self):
        masters = load_preset("rw-burst4").master_list()
        assert len(masters) == 12
        assert [m.op_mix for m in masters].count(OpMix.WRITE_ONLY) == 4
        assert masters[-1].op_mix is OpMix.WRITE_ONLY

    def test_qos_stress(self):
        config = load_preset("qos-stress")
        rt = [m for m in config.master_list() if m.rt]
        assert len(rt) == 1 and rt[0].qos_objective == 60
        assert config.master_count == 12
        assert config.filters.qos_urgency_threshold == 59

    def test_documents_are_copies(self):
        document = preset_document("read-burst4")
        document["masters"].clear()
        assert preset_document("read-burst4")["masters"]

    def test_unknown_preset(self):
        with pytest.raises(InvalidSpec):
            load_preset("read-burst16")
