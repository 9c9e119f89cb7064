"""Value types of the decomposition graph."""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Mapping, Optional, Tuple, Union

from ...models import AtomicPredicate, Formula, Symbol

AUX = "aux"


@dataclass(frozen=True)
class RunCandidate:
    """Automaton path q, q1, ..., qK; the terminal qK then repeats on its self-loop."""
    path: Tuple[str, ...]

    @property
    def hops(self) -> int:
        return len(self.path) - 1

    @property
    def source(self) -> str:
        return self.path[0]

    @property
    def target(self) -> str:
        return self.path[-1]

    @property
    def intermediates(self) -> Tuple[str, ...]:
        return self.path[1:-1]

    def __str__(self) -> str:
        return " ".join(self.path + (self.path[-1],))


@dataclass(frozen=True)
class RegionGoal:
    """Be inside the named region."""
    region: str

    def satisfied_by(self, region: Optional[str]) -> bool:
        return region == self.region

    def __str__(self) -> str:
        return self.region


@dataclass(frozen=True)
class FreeGoal:
    """Be somewhere no predicate of the transition holds for this robot.

    `avoid` lists the regions the guard mentions for the robot; a robot outside all of
    them already satisfies the goal, otherwise it heads for the nearest cell outside
    every region.
    """
    avoid: FrozenSet[str] = frozenset()

    def satisfied_by(self, region: Optional[str]) -> bool:
        return region is None or region not in self.avoid

    def __str__(self) -> str:
        return "free"


Goal = Union[RegionGoal, FreeGoal]


@dataclass(frozen=True)
class SymbolAssignment:
    """A target symbol with its involved/constrained robots and per-robot goals."""
    symbol: Symbol
    involved: FrozenSet[int]
    constrained: FrozenSet[int]
    goals: Tuple[Tuple[int, Goal], ...]
    admissible_for: FrozenSet[Symbol] = frozenset()

    def goal(self, robot: int) -> Optional[Goal]:
        for j, goal in self.goals:
            if j == robot:
                return goal
        return None

    def is_admissible(self, sustaining: Symbol) -> bool:
        return sustaining in self.admissible_for


@dataclass(frozen=True)
class GraphEdge:
    source: str
    target: str
    run: RunCandidate
    guard: Formula
    assignments: Tuple[SymbolAssignment, ...]
    accepting: bool

    @property
    def key(self) -> Tuple[str, str]:
        return self.source, self.target

    def admissible(self, sustaining: Symbol) -> Tuple[SymbolAssignment, ...]:
        return tuple(a for a in self.assignments if a.is_admissible(sustaining))


@dataclass(frozen=True, eq=False)
class DecompGraph:
    """Graph of decomposable transitions with its accepting nodes and distances.

    `dist[q]` is the hop distance to the accepting nodes, None when unreachable.
    """
    nodes: Tuple[str, ...]
    edges: Tuple[GraphEdge, ...]
    vf: FrozenSet[str]
    dist: Mapping[str, Optional[int]]
    loop_guards: Mapping[str, Formula]
    loop_atoms: Mapping[str, FrozenSet[AtomicPredicate]]
    initial: str = AUX
    truncated_runs: int = 0
    _index: Dict[Tuple[str, str], GraphEdge] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        self._index.update({e.key: e for e in self.edges})

    def edge(self, source: str, target: str) -> Optional[GraphEdge]:
        return self._index.get((source, target))

    def out_edges(self, source: str) -> Tuple[GraphEdge, ...]:
        return tuple(e for e in self.edges if e.source == source)

    @property
    def accepting_edges(self) -> Tuple[GraphEdge, ...]:
        return tuple(e for e in self.edges if e.accepting)
