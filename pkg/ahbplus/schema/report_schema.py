"""JSON Schema (draft 7) of the structured run report."""

from ahbplus.constants import REPORT_SCHEMA_VERSION

_COUNT = {"type": "integer", "minimum": 0}
_FRACTION = {"type": "number", "minimum": 0, "maximum": 1}
_NON_NEGATIVE = {"type": "number", "minimum": 0}

MASTER_METRICS_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": [
        "master",
        "rt",
        "objective",
        "completed",
        "bytes",
        "throughput",
        "grant_latency_mean",
        "grant_latency_max",
        "completion_latency_mean",
        "completion_latency_max",
        "completion_latency_p95",
        "qos_violations",
    ],
    "properties": {
        "master": _COUNT,
        "rt": {"type": "boolean"},
        "objective": _COUNT,
        "completed": _COUNT,
        "bytes": _COUNT,
        "throughput": _NON_NEGATIVE,
        "grant_latency_mean": _NON_NEGATIVE,
        "grant_latency_max": _COUNT,
        "completion_latency_mean": _NON_NEGATIVE,
        "completion_latency_max": _COUNT,
        "completion_latency_p95": _NON_NEGATIVE,
        "qos_violations": _COUNT,
    },
}

VIOLATION_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["cycle", "kind", "rule", "message"],
    "properties": {
        "cycle": _COUNT,
        "kind": {"enum": ["FatalSelfCheck", "ProtocolProperty"]},
        "rule": {"type": "string"},
        "message": {"type": "string"},
    },
}

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "ahbplus run report",
    "type": "object",
    "additionalProperties": False,
    "required": ["schema_version", "config", "overrides", "summary", "metrics", "violations"],
    "properties": {
        "schema_version": {"const": REPORT_SCHEMA_VERSION},
        "config": {"type": "object"},
        "overrides": {"type": "array", "items": {"type": "string"}},
        "summary": {
            "type": "object",
            "additionalProperties": False,
            "required": ["total_cycles", "completed_transactions", "terminated_reason"],
            "properties": {
                "total_cycles": _COUNT,
                "completed_transactions": _COUNT,
                "terminated_reason": {"enum": ["MaxCycles", "AllMastersDone", "AssertionAbort"]},
            },
        },
        "metrics": {
            "type": "object",
            "additionalProperties": False,
            "required": [
                "total_cycles",
                "utilization",
                "contention",
                "beats_delivered",
                "bytes_delivered",
                "row_hit_ratio",
                "command_counts",
                "write_buffer",
                "masters",
            ],
            "properties": {
                "total_cycles": _COUNT,
                "utilization": _FRACTION,
                "contention": _NON_NEGATIVE,
                "beats_delivered": _COUNT,
                "bytes_delivered": _COUNT,
                "row_hit_ratio": _FRACTION,
                "command_counts": {"type": "object", "additionalProperties": _COUNT},
                "write_buffer": {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["posted", "occupancy_histogram"],
                    "properties": {
                        "posted": _COUNT,
                        "occupancy_histogram": {"type": "array", "items": _COUNT},
                    },
                },
                "masters": {"type": "array", "items": MASTER_METRICS_SCHEMA},
            },
        },
        "violations": {"type": "array", "items": VIOLATION_SCHEMA},
        "violation_counts": {"type": "object", "additionalProperties": _COUNT},
        "fault": {
            "type": ["object", "null"],
            "properties": {
                "rule": {"type": "string"},
                "cycle": _COUNT,
                "applied_at": {"type": ["integer", "null"]},
            },
        },
    },
}
