"""Bus and master-port profiling."""

from ahbplus.profiling.collector import ProfileAccumulator, ProfileCollector, finalize
from ahbplus.profiling.events import EventKind, ProfileEvent
from ahbplus.profiling.report import MasterMetrics, MetricsReport
from ahbplus.profiling.trace import TraceWriter, read_trace, recount_bytes, recount_utilization

__all__ = [
    "EventKind",
    "MasterMetrics",
    "MetricsReport",
    "ProfileAccumulator",
    "ProfileCollector",
    "ProfileEvent",
    "TraceWriter",
    "finalize",
    "read_trace",
    "recount_bytes",
    "recount_utilization",
]
