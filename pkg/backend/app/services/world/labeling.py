from typing import Mapping

from ...models import OBSTACLE, AtomicPredicate, Symbol
from .environment import Cell, Environment


def label(positions: Mapping[int, Cell], env: Environment) -> Symbol:
    """Predicates true for the robot positions: the region each robot is in and any obstacle it is on."""
    preds = []
    for robot, cell in sorted(positions.items()):
        if not env.in_bounds(cell):
            raise ValueError(f"robot {robot} position {cell} is out of bounds")
        region = env.region_at(cell)
        if region is not None:
            preds.append(AtomicPredicate(robot, region))
        if env.is_obstacle(cell):
            preds.append(AtomicPredicate(robot, OBSTACLE))
    return Symbol(frozenset(preds))
