"""Single-robot planning on the known occupancy map."""
from .astar import neighbours, path_blocked, plan
from .problem import LocalProblem, Path

__all__ = ['LocalProblem', 'Path', 'plan', 'path_blocked', 'neighbours']
