"""Trace events and run metrics."""
from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, Field

EventKind = Literal[
    "move",
    "sense",
    "map-delta",
    "replan",
    "symbol-selected",
    "goal-reached",
    "waiting",
    "transition",
    "accepting-edge",
    "edge-removed",
    "mission-infeasible",
    "safety-violation",
    "message",
]


class TraceEvent(BaseModel):
    tick: int = Field(..., ge=0)
    kind: EventKind
    payload: Dict[str, Any] = {}

    def to_line(self) -> str:
        return self.model_dump_json()


class RunMetrics(BaseModel):
    """Summary of one run. Times are wall-clock milliseconds and vary between runs."""
    outcome: Literal["satisfied", "infeasible", "budget-exhausted"]
    ticks: int = 0
    first_accept_tick: Optional[int] = None
    second_accept_tick: Optional[int] = None
    accept_count: int = 0
    transitions: int = 0
    replans: int = 0
    plan_calls: int = 0
    mean_plan_ms: Optional[float] = None
    map_updates: int = 0
    mean_map_update_ms: Optional[float] = None
    messages: int = 0
    removed_edges: int = 0
