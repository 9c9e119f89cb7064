from dataclasses import dataclass

from .environment import Cell


@dataclass
class RobotState:
    """Robot pose with its motion period (ticks per move) and sensing range in cells."""
    robot: int
    cell: Cell
    step_period: int = 1
    sensing_range: float = 2.0

    def moves_at(self, tick: int) -> bool:
        return tick % self.step_period == 0
