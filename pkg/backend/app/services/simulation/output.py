"""Trace and metrics files."""
import json
from pathlib import Path
from typing import Iterable, List

from ...models import RunMetrics, TraceEvent


def trace_lines(events: Iterable[TraceEvent]) -> str:
    return "".join(e.to_line() + "\n" for e in events)


def write_trace(events: Iterable[TraceEvent], path: Path) -> None:
    Path(path).write_text(trace_lines(events))


def read_trace(path: Path) -> List[TraceEvent]:
    lines = Path(path).read_text().splitlines()
    return [TraceEvent.model_validate_json(line) for line in lines if line.strip()]


def write_metrics(metrics: RunMetrics, path: Path) -> None:
    Path(path).write_text(json.dumps(metrics.model_dump(), indent=2) + "\n")
