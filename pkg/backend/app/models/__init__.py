"""Shared value types and document schemas."""
from .predicates import OBSTACLE, AtomicPredicate, LassoWord, Symbol
from .formula import (
    FALSE,
    TRUE,
    Formula,
    Op,
    always,
    atom,
    conj,
    conj_all,
    disj,
    disj_all,
    eventually,
    implies,
    neg,
    until,
)
from .scenario import GridSpec, RegionSpec, RobotSpec, ScenarioDocument
from .trace import EventKind, RunMetrics, TraceEvent

__all__ = [
    'OBSTACLE',
    'AtomicPredicate',
    'LassoWord',
    'Symbol',
    'FALSE',
    'TRUE',
    'Formula',
    'Op',
    'always',
    'atom',
    'conj',
    'conj_all',
    'disj',
    'disj_all',
    'eventually',
    'implies',
    'neg',
    'until',
    'GridSpec',
    'RegionSpec',
    'RobotSpec',
    'ScenarioDocument',
    'EventKind',
    'RunMetrics',
    'TraceEvent',
]
