"""Reactive mission loop: hold an automaton state, dispatch robots, fire transitions."""
import logging
import time
from typing import Callable, Dict, List, Optional, Sequence

from ...exceptions import InvariantViolation, NoCandidateError, NoSymbolError
from ...models import Formula, RunMetrics, TraceEvent
from ..decomposition.graph import without_edges
from ..decomposition.types import DecompGraph, GraphEdge, SymbolAssignment
from ..planning import LocalProblem, Path, path_blocked, plan
from ..world import Cell, Environment, OccupancyGrid, RobotState, disk_mask, label, sense
from .selection import Planner, select_next_state, select_symbol
from .state import ExecutiveState, Phase

logger = logging.getLogger(__name__)

ACCEPT_TARGET = 2


def _mean_ms(samples: List[float]) -> Optional[float]:
    if not samples:
        return None
    return 1000.0 * sum(samples) / len(samples)


def _names(assignment: SymbolAssignment) -> List[str]:
    return [p.name for p in assignment.symbol]


class MissionExecutive:
    """Drives the robots along the decomposition graph until an accepting edge is taken twice.

    Each tick moves the robots that are due, senses, repairs blocked paths and fires
    the pending transition once every constrained robot has reached its goal.
    """

    def __init__(self, env: Environment, robots: Sequence[RobotState], graph: DecompGraph,
                 check_invariants: bool = False, planner: Planner = plan,
                 clock: Callable[[], float] = time.perf_counter):
        self.env = env
        self.robots: Dict[int, RobotState] = {r.robot: r for r in sorted(robots, key=lambda r: r.robot)}
        self.base_graph = graph
        self.graph = graph
        self.grid = OccupancyGrid.for_environment(env)
        self.check_invariants = check_invariants
        self.planner = planner
        self.clock = clock
        self.state = ExecutiveState(current=graph.initial, phases={j: Phase.IDLE for j in self.robots})
        self.paths: Dict[int, Path] = {}
        self.cursors: Dict[int, int] = {}
        self.tick_count = 0
        self.outcome: Optional[str] = None
        self.replans = 0
        self.messages = 0
        self.plan_times: List[float] = []
        self.map_update_times: List[float] = []
        self._events: List[TraceEvent] = []

    @property
    def positions(self) -> Dict[int, Cell]:
        return {j: r.cell for j, r in self.robots.items()}

    @property
    def done(self) -> bool:
        return self.outcome is not None

    def _emit(self, kind: str, **payload) -> None:
        self._events.append(TraceEvent(tick=self.tick_count, kind=kind, payload=payload))
        if kind == "message":
            self.messages += 1

    def _flush(self) -> List[TraceEvent]:
        events, self._events = self._events, []
        return events

    def _plan(self, problem: LocalProblem, grid: OccupancyGrid) -> Optional[Path]:
        started = self.clock()
        path = self.planner(problem, grid)
        self.plan_times.append(self.clock() - started)
        return path

    def start(self) -> List[TraceEvent]:
        """Sense from the initial poses and choose the first transition (tick 0)."""
        s = self.state
        s.sustaining = label(self.positions, self.env).restrict(self.graph.loop_atoms[s.current])
        self._sense()
        self._select_target()
        return self._flush()

    def tick(self) -> List[TraceEvent]:
        if self.done:
            return []
        self.tick_count += 1
        self._move()
        self._sense()
        self._replan()
        if not self.done:
            self._check_arrivals()
        return self._flush()

    def _move(self) -> None:
        for j, r in self.robots.items():
            if self.state.phases[j] != Phase.MOVING or not r.moves_at(self.tick_count):
                continue
            cells = self.paths[j].cells
            i = self.cursors[j]
            if i + 1 >= len(cells):
                continue
            self.cursors[j] = i + 1
            r.cell = cells[i + 1]
            self._emit("move", robot=j, cell=list(r.cell))
            if self.env.is_obstacle(r.cell):
                logger.error(f"Robot {j} entered obstacle cell {r.cell}")
                self._emit("safety-violation", robot=j, cell=list(r.cell))

    def _sense(self) -> None:
        started = self.clock()
        added = set()
        for j, r in self.robots.items():
            readings = sense(self.env, r.cell, r.sensing_range)
            seen = disk_mask(self.env.width, self.env.height, r.cell, r.sensing_range)
            fresh = self.grid.update(readings, seen)
            if fresh:
                self._emit("sense", robot=j, detected=len(readings), new=len(fresh))
            added |= fresh
        self.map_update_times.append(self.clock() - started)
        if added:
            self._emit("map-delta", cells=[list(c) for c in sorted(added)])

    def _replan(self) -> None:
        s = self.state
        for j in sorted(self.paths):
            if s.phases[j] != Phase.MOVING or not path_blocked(self.paths[j], self.grid, self.cursors[j]):
                continue
            r = self.robots[j]
            goal = s.assignment.goal(j)
            path = self._plan(LocalProblem.build(self.env, j, r.cell, goal, r.sensing_range), self.grid)
            self.replans += 1
            if path is None:
                self._emit("replan", robot=j, goal=str(goal), reachable=False)
                logger.info(f"Goal {goal} of robot {j} became unreachable; selecting another symbol")
                self._select_target(keep_target=True)
                return
            self.paths[j] = path
            self.cursors[j] = 0
            self._emit("replan", robot=j, goal=str(goal), reachable=True, length=path.moves)

    def _select_target(self, keep_target: bool = False) -> None:
        """Choose the transition to pursue and a reachable symbol for it.

        Edges left with no reachable symbol are removed for the rest of the run.
        """
        s = self.state
        keep = keep_target and s.target is not None
        while True:
            if not keep:
                try:
                    s.target = select_next_state(self.graph, s.current)
                except NoCandidateError as e:
                    self._infeasible(str(e))
                    return
            keep = False
            edge = self.graph.edge(s.current, s.target)
            try:
                assignment, paths = select_symbol(edge, s.sustaining, self.env, self.grid, self.robots, self._plan)
            except NoSymbolError as e:
                self._remove_edge(edge, str(e))
                continue
            self._dispatch(edge, assignment, paths)
            return

    def _remove_edge(self, edge: GraphEdge, reason: str) -> None:
        self.state.removed_edges.append(edge.key)
        self.graph = without_edges(self.base_graph, self.state.removed_edges)
        logger.warning(f"Removed edge {edge.source} -> {edge.target}: {reason}")
        self._emit("edge-removed", source=edge.source, target=edge.target, reason=reason)

    def _infeasible(self, reason: str) -> None:
        s = self.state
        self.outcome = "infeasible"
        s.target = None
        s.assignment = None
        logger.warning(f"Mission infeasible at {s.current}: {reason}")
        self._emit("mission-infeasible", state=s.current, reason=reason)

    def _dispatch(self, edge: GraphEdge, assignment: SymbolAssignment, paths: Dict[int, Path]) -> None:
        s = self.state
        s.assignment = assignment
        s.arrived_at = None
        self.paths = dict(paths)
        self.cursors = {j: 0 for j in paths}
        for j in self.robots:
            s.phases[j] = Phase.MOVING if j in paths else Phase.IDLE
        self._emit(
            "symbol-selected", source=edge.source, target=edge.target, run=list(edge.run.path),
            symbol=_names(assignment), goals={str(j): str(goal) for j, goal in assignment.goals},
        )
        self._emit("message", topic="symbol", robots=sorted(paths))

    def _check_arrivals(self) -> None:
        s = self.state
        if s.assignment is None:
            return
        arrived, pending = [], []
        for j, goal in s.assignment.goals:
            if goal.satisfied_by(self.env.region_at(self.robots[j].cell)):
                if s.phases[j] == Phase.MOVING:
                    s.phases[j] = Phase.WAITING
                    arrived.append((j, goal))
            else:
                pending.append(j)
        for j, goal in arrived:
            self._emit("goal-reached", robot=j, cell=list(self.robots[j].cell), goal=str(goal))
            self._emit("message", topic="arrival", robots=[j])
            if pending:
                self._emit("waiting", robot=j, pending=pending)
        edge = self.graph.edge(s.current, s.target)
        if pending:
            self._check_sustained(self.graph.loop_guards[s.current], f"self-loop of {s.current}")
            return
        # the held target symbol walks the run through its intermediate states
        self._check_sustained(edge.guard, f"guard of {edge.run}")
        if s.arrived_at is None:
            s.arrived_at = self.tick_count
        if self.tick_count - s.arrived_at >= max(edge.run.hops - 1, 0):
            self._fire(edge)

    def _check_sustained(self, guard: Formula, what: str) -> None:
        """The guard the robots currently hold must stay true on every tick."""
        symbol = label(self.positions, self.env)
        if guard.evaluate(symbol.predicates):
            return
        message = f"{what} is false under {symbol} at tick {self.tick_count}"
        if self.check_invariants:
            raise InvariantViolation(message)
        logger.warning(message)

    def _fire(self, edge: GraphEdge) -> None:
        s = self.state
        s.current = edge.target
        s.transitions += 1
        self._emit("transition", source=edge.source, target=edge.target, run=list(edge.run.path),
                   symbol=_names(s.assignment))
        logger.info(f"Tick {self.tick_count}: transition {edge.source} -> {edge.target}")
        if edge.accepting:
            s.accept_count += 1
            s.accept_ticks.append(self.tick_count)
            self._emit("accepting-edge", source=edge.source, target=edge.target, count=s.accept_count)
        s.sustaining = label(self.positions, self.env).restrict(self.graph.loop_atoms[s.current])
        s.target = None
        s.assignment = None
        s.arrived_at = None
        self.paths = {}
        self.cursors = {}
        for j in self.robots:
            s.phases[j] = Phase.IDLE
        if s.accept_count >= ACCEPT_TARGET:
            self.outcome = "satisfied"
            logger.info(f"Accepting edges taken {s.accept_count} times by tick {self.tick_count}")
            return
        self._select_target()

    def metrics(self) -> RunMetrics:
        s = self.state
        return RunMetrics(
            outcome=self.outcome or "budget-exhausted",
            ticks=self.tick_count,
            first_accept_tick=s.accept_ticks[0] if s.accept_ticks else None,
            second_accept_tick=s.accept_ticks[1] if len(s.accept_ticks) > 1 else None,
            accept_count=s.accept_count,
            transitions=s.transitions,
            replans=self.replans,
            plan_calls=len(self.plan_times),
            mean_plan_ms=_mean_ms(self.plan_times),
            map_updates=len(self.map_update_times),
            mean_map_update_ms=_mean_ms(self.map_update_times),
            messages=self.messages,
            removed_edges=len(s.removed_edges),
        )
