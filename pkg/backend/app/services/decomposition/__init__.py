"""Decomposition of automaton transitions into independently plannable robot goals."""
from .export import graph_to_document, graph_to_dot, write_graph
from .graph import (
    DEFAULT_HOP_CAP,
    DecompositionBuilder,
    RunEnumerator,
    add_aux_state,
    build_graph,
    build_guard,
    check_decomposable,
    distances,
    enumerate_runs,
    has_accepting_cycle,
    reachable_set,
    target_assignment,
    without_edges,
)
from .separability import SeparabilityReport, check_robot_separable, separability_table
from .types import AUX, DecompGraph, FreeGoal, Goal, GraphEdge, RegionGoal, RunCandidate, SymbolAssignment

__all__ = [
    'AUX', 'DecompGraph', 'GraphEdge', 'RunCandidate', 'SymbolAssignment', 'RegionGoal', 'FreeGoal',
    'Goal', 'DEFAULT_HOP_CAP', 'DecompositionBuilder', 'RunEnumerator', 'add_aux_state', 'build_graph',
    'build_guard', 'check_decomposable', 'distances', 'enumerate_runs', 'has_accepting_cycle',
    'reachable_set', 'target_assignment', 'without_edges', 'SeparabilityReport',
    'check_robot_separable', 'separability_table', 'graph_to_dot', 'graph_to_document', 'write_graph',
]
