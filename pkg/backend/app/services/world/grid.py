"""Shared binary occupancy grid built from sensor readings."""
from typing import FrozenSet, Iterable

import numpy as np

from .environment import Cell


class OccupancyGrid:
    """Believed-occupied cells plus an explored mask kept for diagnostics only.

    Cells never sensed read as free. Occupied flags are never cleared.
    """

    def __init__(self, width: int, height: int):
        self.width = width
        self.height = height
        self.occupied = np.zeros((width, height), dtype=bool)
        self.explored = np.zeros((width, height), dtype=bool)

    @classmethod
    def for_environment(cls, env) -> "OccupancyGrid":
        return cls(env.width, env.height)

    def is_occupied(self, cell: Cell) -> bool:
        return bool(self.occupied[cell])

    def known_obstacles(self) -> FrozenSet[Cell]:
        return frozenset((int(x), int(y)) for x, y in np.argwhere(self.occupied))

    def update(self, readings: Iterable[Cell], explored: np.ndarray = None) -> FrozenSet[Cell]:
        """Mark readings occupied in place and return the cells that were not known before."""
        added = frozenset(c for c in readings if not self.occupied[c])
        for x, y in added:
            self.occupied[x, y] = True
        if explored is not None:
            self.explored |= explored
        return added

    def copy(self) -> "OccupancyGrid":
        other = OccupancyGrid(self.width, self.height)
        other.occupied = self.occupied.copy()
        other.explored = self.explored.copy()
        return other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OccupancyGrid):
            return NotImplemented
        return np.array_equal(self.occupied, other.occupied) and np.array_equal(self.explored, other.explored)


def update_map(m: OccupancyGrid, readings: Iterable[Cell]) -> OccupancyGrid:
    """New grid equal to m with the readings marked occupied."""
    updated = m.copy()
    updated.update(readings)
    return updated
