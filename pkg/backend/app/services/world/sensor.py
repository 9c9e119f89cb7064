"""Deterministic omnidirectional range sensor."""
from typing import FrozenSet

import numpy as np

from .environment import Cell, Environment


def disk_mask(width: int, height: int, pos: Cell, radius: float) -> np.ndarray:
    """Cells whose centre lies within `radius` of the centre of pos."""
    xs, ys = np.ogrid[:width, :height]
    px, py = pos
    return (xs - px) ** 2 + (ys - py) ** 2 <= radius * radius


def sense(env: Environment, pos: Cell, radius: float) -> FrozenSet[Cell]:
    """Ground-truth obstacle cells inside the sensing disk around pos."""
    if not env.in_bounds(pos):
        raise ValueError(f"sensor position {pos} is out of bounds")
    if radius < 0:
        raise ValueError(f"sensing range must be non-negative, got {radius}")
    hits = np.argwhere(env.occupied & disk_mask(env.width, env.height, pos, radius))
    return frozenset((int(x), int(y)) for x, y in hits)
