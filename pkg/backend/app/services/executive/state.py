"""Mutable state of the mission executive."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from ...models import Symbol
from ..decomposition.types import AUX, SymbolAssignment


class Phase(str, Enum):
    MOVING = "moving"
    WAITING = "waiting"
    IDLE = "idle"


@dataclass
class ExecutiveState:
    """Automaton state being held, the transition being pursued and per-robot progress."""
    current: str = AUX
    sustaining: Symbol = field(default_factory=Symbol)
    target: Optional[str] = None
    assignment: Optional[SymbolAssignment] = None
    phases: Dict[int, Phase] = field(default_factory=dict)
    accept_count: int = 0
    accept_ticks: List[int] = field(default_factory=list)
    removed_edges: List[Tuple[str, str]] = field(default_factory=list)
    arrived_at: Optional[int] = None
    transitions: int = 0
