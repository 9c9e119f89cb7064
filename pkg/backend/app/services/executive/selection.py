"""Choice of the next automaton state and of the symbol that reaches it."""
import logging
from typing import Callable, Dict, Mapping, Optional, Tuple

from ...exceptions import NoCandidateError, NoSymbolError
from ...models import Symbol
from ..automaton.nba import state_key
from ..decomposition.types import DecompGraph, GraphEdge, SymbolAssignment
from ..planning import LocalProblem, Path, plan
from ..world import Environment, OccupancyGrid, RobotState

logger = logging.getLogger(__name__)

Planner = Callable[[LocalProblem, OccupancyGrid], Optional[Path]]


def select_next_state(g: DecompGraph, current: str) -> str:
    """Next automaton state to pursue from `current`.

    Outside the accepting nodes this is a successor one hop closer to them; on an
    accepting node it is the target of an accepting out-edge. Ties go to the smallest
    state name.

    Raises:
        NoCandidateError: If no out-edge qualifies.
    """
    out = sorted(g.out_edges(current), key=lambda e: state_key(e.target))
    if current in g.vf:
        for e in out:
            if e.accepting:
                return e.target
        raise NoCandidateError(f"accepting node {current} has no accepting out-edge left")
    d = g.dist.get(current)
    if d is None:
        raise NoCandidateError(f"no accepting edge is reachable from {current}")
    for e in out:
        if g.dist.get(e.target) == d - 1:
            return e.target
    raise NoCandidateError(f"no successor of {current} is closer to the accepting edges")


def select_symbol(edge: GraphEdge, sustaining: Symbol, env: Environment, grid: OccupancyGrid,
                  robots: Mapping[int, RobotState], planner: Planner = plan
                  ) -> Tuple[SymbolAssignment, Dict[int, Path]]:
    """Cheapest admissible target symbol of the edge whose goals are all reachable on the known map.

    Cost is the sum of the planned path costs of the constrained robots; ties go to the
    smallest symbol.

    Raises:
        NoSymbolError: If no admissible symbol has all its goals reachable.
    """
    cache: Dict[Tuple[int, object], Optional[Path]] = {}
    best = None
    for assignment in edge.admissible(sustaining):
        paths: Dict[int, Path] = {}
        for robot, goal in assignment.goals:
            if (robot, goal) not in cache:
                r = robots[robot]
                problem = LocalProblem.build(env, robot, r.cell, goal, r.sensing_range)
                cache[robot, goal] = planner(problem, grid)
            path = cache[robot, goal]
            if path is None:
                break
            paths[robot] = path
        else:
            cost = sum(p.cost for p in paths.values())
            rank = (cost, assignment.symbol.key)
            if best is None or rank < best[0]:
                best = (rank, assignment, paths)
    if best is None:
        raise NoSymbolError(f"no reachable symbol for edge {edge.source} -> {edge.target} under {sustaining}")
    (cost, _), assignment, paths = best
    logger.debug(f"Selected {assignment.symbol} for {edge.source} -> {edge.target} at cost {cost:.2f}")
    return assignment, paths

