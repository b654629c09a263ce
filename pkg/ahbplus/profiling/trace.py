"""Comma-separated event trace: ``cycle,event,master,txn,arg``."""

import csv
from pathlib import Path
from typing import IO, Iterable, List, Optional, Union

from ahbplus.profiling.events import EventKind, ProfileEvent

TRACE_HEADER = ("cycle", "event", "master", "txn", "arg")


class TraceWriter:
    """Streams events to a CSV file as they are recorded."""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._file: Optional[IO[str]] = self.path.open("w", newline="")
        self._writer = csv.writer(self._file, lineterminator="\n")
        self._writer.writerow(TRACE_HEADER)

    def __call__(self, event: ProfileEvent) -> None:
        self._writer.writerow(event.to_row())

    def close(self) -> None:
        if self._file is not None:
            self._file.close()
            self._file = None

    def __enter__(self) -> "TraceWriter":
        return self

    def __exit__(self, *exc) -> None:
        self.close()


def read_trace(path: Union[str, Path]) -> List[ProfileEvent]:
    with Path(path).open(newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None or tuple(header) != TRACE_HEADER:
            raise ValueError(f"{path} is not an event trace (header {header})")
        return [ProfileEvent.from_row(row) for row in reader]


def recount_utilization(events: Iterable[ProfileEvent], total_cycles: int) -> float:
    """Utilization recomputed from raw BeatDelivered events."""
    beat_cycles = {e.cycle for e in events if e.kind is EventKind.BEAT_DELIVERED}
    return len(beat_cycles) / total_cycles if total_cycles else 0.0


def recount_bytes(events: Iterable[ProfileEvent], bus_bytes: int) -> int:
    """Bus-level bytes delivered according to the trace."""
    return bus_bytes * sum(1 for e in events if e.kind is EventKind.BEAT_DELIVERED)
