"""End-of-run metrics."""

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Tuple


@dataclass(frozen=True)
class MasterMetrics:
    """Metrics of one master port.

    Latencies are in cycles from ``issue_cycle``: grant latency to the grant
    (or posting), completion latency to the last beat (or posting).
    """

    master: int
    rt: bool = False
    objective: int = 0
    completed: int = 0
    bytes: int = 0
    throughput: float = 0.0
    grant_latency_mean: float = 0.0
    grant_latency_max: int = 0
    completion_latency_mean: float = 0.0
    completion_latency_max: int = 0
    completion_latency_p95: float = 0.0
    qos_violations: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class MetricsReport:
    """Bus-level and per-master metrics of a finished run."""

    total_cycles: int
    utilization: float = 0.0
    contention: float = 0.0
    beats_delivered: int = 0
    bytes_delivered: int = 0
    masters: Tuple[MasterMetrics, ...] = ()
    buffer_occupancy_histogram: Tuple[int, ...] = ()
    write_buffer_posted: int = 0
    command_counts: Dict[str, int] = field(default_factory=dict)
    row_hit_ratio: float = 0.0

    @property
    def completed_bytes(self) -> int:
        return sum(m.bytes for m in self.masters)

    def master(self, master: int) -> MasterMetrics:
        return self.masters[master]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "total_cycles": self.total_cycles,
            "utilization": self.utilization,
            "contention": self.contention,
            "beats_delivered": self.beats_delivered,
            "bytes_delivered": self.bytes_delivered,
            "row_hit_ratio": self.row_hit_ratio,
            "command_counts": dict(self.command_counts),
            "write_buffer": {
                "posted": self.write_buffer_posted,
                "occupancy_histogram": list(self.buffer_occupancy_histogram),
            },
            "masters": [m.to_dict() for m in self.masters],
        }
