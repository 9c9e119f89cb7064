"""Local reach-and-avoid problems and the paths that solve them."""
import math
from dataclasses import dataclass, field
from typing import FrozenSet, Optional, Tuple

import numpy as np

from ..decomposition.types import Goal, RegionGoal
from ..world.environment import NO_REGION, Cell, Environment

DIAGONAL_RANGE = math.sqrt(2.0)


@dataclass(frozen=True, eq=False)
class LocalProblem:
    """Reach a goal cell from start without entering forbidden regions or known obstacles.

    `goal_mask` marks the acceptable end cells; `forbidden_mask` marks the cells of
    every forbidden region. Both are indexed [x, y].
    """
    robot: int
    start: Cell
    goal: Goal
    current_region: Optional[str]
    forbidden: FrozenSet[str]
    goal_mask: np.ndarray = field(repr=False)
    forbidden_mask: np.ndarray = field(repr=False)
    diagonal: bool = True

    @classmethod
    def build(cls, env: Environment, robot: int, start: Cell, goal: Goal,
              sensing_range: float = DIAGONAL_RANGE) -> "LocalProblem":
        """Problem for one robot; moves are 8-connected only when the sensor covers diagonal neighbours."""
        current = env.region_at(start)
        if isinstance(goal, RegionGoal):
            if goal.region not in env.regions:
                raise ValueError(f"unknown goal region {goal.region}")
            goal_mask = env.region_mask([goal.region])
            keep = {current, goal.region}
        else:
            if goal.satisfied_by(current):
                goal_mask = np.zeros((env.width, env.height), dtype=bool)
                goal_mask[start] = True
            else:
                goal_mask = env.region_index == NO_REGION
            keep = {current}
        forbidden = frozenset(name for name in env.region_names if name not in keep)
        return cls(
            robot=robot, start=start, goal=goal, current_region=current, forbidden=forbidden,
            goal_mask=goal_mask, forbidden_mask=env.region_mask(forbidden),
            diagonal=sensing_range >= DIAGONAL_RANGE,
        )

    @property
    def goal_bounds(self) -> Optional[Tuple[int, int, int, int]]:
        cells = np.argwhere(self.goal_mask)
        if len(cells) == 0:
            return None
        (x0, y0), (x1, y1) = cells.min(axis=0), cells.max(axis=0)
        return int(x0), int(y0), int(x1), int(y1)


@dataclass(frozen=True)
class Path:
    """Cells from the start to the goal; a single cell means the robot is already there."""
    cells: Tuple[Cell, ...]
    cost: float = 0.0

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def end(self) -> Cell:
        return self.cells[-1]

    @property
    def moves(self) -> int:
        return len(self.cells) - 1
