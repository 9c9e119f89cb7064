"""Atomic predicates, symbols and lasso words."""
import re
from dataclasses import dataclass, field
from typing import AbstractSet, Dict, FrozenSet, Iterable, Iterator, Optional, Tuple

OBSTACLE = "O"

_PREDICATE_PATTERN = re.compile(r"^pi_(\d+)_(\w+)$")


@dataclass(frozen=True, order=True)
class AtomicPredicate:
    """Predicate "robot is inside region target" (or on an obstacle when target is O)."""
    robot: int
    target: str

    @classmethod
    def from_name(cls, name: str) -> "AtomicPredicate":
        """Parse a `pi_<robot>_<region>` name.

        Raises:
            ValueError: If the name does not follow the predicate syntax.
        """
        match = _PREDICATE_PATTERN.match(name)
        if not match:
            raise ValueError(f"'{name}' is not of the form pi_<robot>_<region>")
        robot = int(match.group(1))
        if robot < 1:
            raise ValueError(f"robot index in '{name}' must be >= 1")
        return cls(robot=robot, target=match.group(2))

    @property
    def name(self) -> str:
        return f"pi_{self.robot}_{self.target}"

    @property
    def is_obstacle(self) -> bool:
        return self.target == OBSTACLE

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Symbol:
    """Set of predicates that hold at one instant. The empty symbol is Symbol()."""
    predicates: FrozenSet[AtomicPredicate] = field(default_factory=frozenset)

    @classmethod
    def of(cls, *items) -> "Symbol":
        """Build a symbol from predicates or predicate names."""
        preds = [p if isinstance(p, AtomicPredicate) else AtomicPredicate.from_name(p) for p in items]
        return cls(frozenset(preds))

    def __iter__(self) -> Iterator[AtomicPredicate]:
        return iter(sorted(self.predicates))

    def __len__(self) -> int:
        return len(self.predicates)

    def __contains__(self, pred: object) -> bool:
        return pred in self.predicates

    @property
    def key(self) -> Tuple[AtomicPredicate, ...]:
        """Sort key giving the deterministic symbol order used everywhere."""
        return tuple(sorted(self.predicates))

    @property
    def has_obstacle(self) -> bool:
        return any(p.is_obstacle for p in self.predicates)

    def is_feasible(self) -> bool:
        """True iff no robot is required to be in two regions at once."""
        seen = set()
        for pred in self.predicates:
            if pred.is_obstacle:
                continue
            if pred.robot in seen:
                return False
            seen.add(pred.robot)
        return True

    def regions(self) -> Dict[int, str]:
        """Map robot -> region for the region predicates of a feasible symbol."""
        return {p.robot: p.target for p in sorted(self.predicates) if not p.is_obstacle}

    @property
    def robots(self) -> FrozenSet[int]:
        """Robots involved through a region predicate."""
        return frozenset(p.robot for p in self.predicates if not p.is_obstacle)

    def region_of(self, robot: int) -> Optional[str]:
        for pred in self.predicates:
            if pred.robot == robot and not pred.is_obstacle:
                return pred.target
        return None

    def restrict(self, atoms: AbstractSet[AtomicPredicate]) -> "Symbol":
        return Symbol(frozenset(p for p in self.predicates if p in atoms))

    def union(self, preds: Iterable[AtomicPredicate]) -> "Symbol":
        return Symbol(self.predicates | frozenset(preds))

    def __str__(self) -> str:
        return "{" + ", ".join(p.name for p in self.key) + "}"


@dataclass(frozen=True)
class LassoWord:
    """Ultimately periodic word prefix . cycle^omega."""
    prefix: Tuple[Symbol, ...]
    cycle: Tuple[Symbol, ...]

    def __post_init__(self):
        if not self.cycle:
            raise ValueError("lasso cycle must contain at least one symbol")
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "cycle", tuple(self.cycle))

    def __len__(self) -> int:
        return len(self.prefix) + len(self.cycle)

    def symbol_at(self, position: int) -> Symbol:
        if position < len(self.prefix):
            return self.prefix[position]
        return self.cycle[position - len(self.prefix)]

    def successor(self, position: int) -> int:
        """Next position in the lasso graph; the last cycle position loops back."""
        if position + 1 < len(self):
            return position + 1
        return len(self.prefix)

    def __str__(self) -> str:
        prefix = " ".join(str(s) for s in self.prefix)
        cycle = " ".join(str(s) for s in self.cycle)
        return f"{prefix} ({cycle})^w".strip()
