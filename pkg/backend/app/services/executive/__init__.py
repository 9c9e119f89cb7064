"""Reactive execution of a decomposed mission."""
from .executive import ACCEPT_TARGET, MissionExecutive
from .selection import select_next_state, select_symbol
from .state import ExecutiveState, Phase

__all__ = ['ACCEPT_TARGET', 'MissionExecutive', 'select_next_state', 'select_symbol', 'ExecutiveState', 'Phase']
