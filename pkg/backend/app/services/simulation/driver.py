"""End-to-end mission runs."""
import logging
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from ...config import Settings
from ...models import RunMetrics, TraceEvent
from ..executive import MissionExecutive
from ..world import OccupancyGrid
from .pipeline import CompiledMission, compile_mission
from .scenario import Scenario

logger = logging.getLogger(__name__)


@dataclass
class RunResult:
    events: List[TraceEvent]
    metrics: RunMetrics
    grid: Optional[OccupancyGrid] = None

    @property
    def outcome(self) -> str:
        return self.metrics.outcome


def resolve_settings(settings: Settings, scenario: Scenario, **overrides) -> Settings:
    """Scenario values override settings; explicit overrides (CLI flags) override both."""
    resolved = settings.with_overrides(tick_budget=scenario.budget, hop_cap=scenario.hop_cap)
    return resolved.with_overrides(**overrides)


def run(scenario: Scenario, settings: Settings, seed: Optional[int] = None,
        compiled: Optional[CompiledMission] = None,
        on_event: Optional[Callable[[TraceEvent], None]] = None) -> RunResult:
    """Compile (unless given) and simulate until the accepting edges are taken twice or the budget ends.

    Raises:
        CompileInfeasibleError: If the mission graph is disconnected from the start.
    """
    compiled = compiled or compile_mission(scenario, settings)
    budget = settings.tick_budget
    if budget == 0:
        logger.warning("Tick budget is zero; nothing simulated")
        return RunResult(events=[], metrics=RunMetrics(outcome="budget-exhausted"))
    rng = np.random.default_rng(scenario.seed if seed is None else seed)
    env = scenario.environment(rng)
    executive = MissionExecutive(env, scenario.robot_states(), compiled.graph, settings.check_invariants)
    events: List[TraceEvent] = []

    def record(batch: List[TraceEvent]) -> None:
        events.extend(batch)
        if on_event is not None:
            for event in batch:
                on_event(event)

    record(executive.start())
    while not executive.done and executive.tick_count < budget:
        record(executive.tick())
    metrics = executive.metrics()
    logger.info(f"Run finished: {metrics.outcome} after {metrics.ticks} ticks, {metrics.accept_count} accepting edges")
    return RunResult(events=events, metrics=metrics, grid=executive.grid)
