"""A* search on the known occupancy map."""
import heapq
import logging
import math
from typing import Dict, List, Optional, Tuple

from ...exceptions import PlanningError
from ..decomposition.types import FreeGoal
from ..world.environment import Cell
from ..world.grid import OccupancyGrid
from .problem import LocalProblem, Path

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2.0)
EPS = 1e-9

_STRAIGHT = [(-1, 0), (0, -1), (0, 1), (1, 0)]
_DIAGONAL = [(-1, -1), (-1, 1), (1, -1), (1, 1)]


def _distance_to_box(cell: Cell, box: Tuple[int, int, int, int], diagonal: bool) -> float:
    x0, y0, x1, y1 = box
    dx = max(x0 - cell[0], 0, cell[0] - x1)
    dy = max(y0 - cell[1], 0, cell[1] - y1)
    if not diagonal:
        return float(dx + dy)
    return abs(dx - dy) + SQRT2 * min(dx, dy)


def neighbours(cell: Cell, grid: OccupancyGrid, diagonal: bool) -> List[Tuple[Cell, float]]:
    """Free neighbours in the known map with their step cost; no corner cutting past known obstacles."""
    x, y = cell
    out = []
    for dx, dy in _STRAIGHT:
        n = (x + dx, y + dy)
        if 0 <= n[0] < grid.width and 0 <= n[1] < grid.height and not grid.occupied[n]:
            out.append((n, 1.0))
    if diagonal:
        for dx, dy in _DIAGONAL:
            n = (x + dx, y + dy)
            if not (0 <= n[0] < grid.width and 0 <= n[1] < grid.height) or grid.occupied[n]:
                continue
            if grid.occupied[x + dx, y] or grid.occupied[x, y + dy]:
                continue
            out.append((n, SQRT2))
    return sorted(out)


def plan(problem: LocalProblem, grid: OccupancyGrid) -> Optional[Path]:
    """Shortest path to any goal cell on the known map, or None when none exists.

    Raises:
        PlanningError: If the start is out of bounds or on a known obstacle.
    """
    start = problem.start
    if not (0 <= start[0] < grid.width and 0 <= start[1] < grid.height):
        raise PlanningError(f"start {start} of robot {problem.robot} is out of bounds")
    if grid.occupied[start]:
        raise PlanningError(f"start {start} of robot {problem.robot} is a known obstacle")
    goal_mask = problem.goal_mask & ~grid.occupied & ~problem.forbidden_mask
    if goal_mask[start]:
        return Path((start,), 0.0)
    box = None if isinstance(problem.goal, FreeGoal) else problem.goal_bounds
    if box is None and not isinstance(problem.goal, FreeGoal):
        return None

    def h(cell: Cell) -> float:
        return 0.0 if box is None else _distance_to_box(cell, box, problem.diagonal)

    g_score: Dict[Cell, float] = {start: 0.0}
    came_from: Dict[Cell, Cell] = {}
    closed = set()
    open_heap = [(h(start), start)]
    while open_heap:
        _, current = heapq.heappop(open_heap)
        if current in closed:
            continue
        if goal_mask[current]:
            return _reconstruct(came_from, current, g_score[current])
        closed.add(current)
        for n, step in neighbours(current, grid, problem.diagonal):
            if n in closed or problem.forbidden_mask[n]:
                continue
            tentative = g_score[current] + step
            if tentative + EPS < g_score.get(n, math.inf):
                g_score[n] = tentative
                came_from[n] = current
                heapq.heappush(open_heap, (tentative + h(n), n))
    logger.debug(f"No path for robot {problem.robot} from {start} to {problem.goal}")
    return None


def _reconstruct(came_from: Dict[Cell, Cell], current: Cell, cost: float) -> Path:
    cells = [current]
    while current in came_from:
        current = came_from[current]
        cells.append(current)
    cells.reverse()
    return Path(tuple(cells), cost)


def path_blocked(path: Path, grid: OccupancyGrid, cursor: int = 0) -> bool:
    """Whether any cell from the cursor onwards is now believed occupied."""
    if not 0 <= cursor < len(path.cells):
        raise ValueError(f"cursor {cursor} outside path of length {len(path.cells)}")
    return any(grid.occupied[c] for c in path.cells[cursor:])
