"""Ground-truth world, shared occupancy map, range sensor and labeling."""
from .environment import Cell, Environment
from .grid import OccupancyGrid, update_map
from .labeling import label
from .pgm import to_pgm, write_pgm
from .robot import RobotState
from .sensor import disk_mask, sense

__all__ = [
    'Cell', 'Environment', 'OccupancyGrid', 'update_map', 'label', 'to_pgm', 'write_pgm',
    'RobotState', 'disk_mask', 'sense',
]
