"""Feasible symbol enumeration and pruning of infeasible transitions."""
import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from ...exceptions import SymbolBudgetError, TemporalGuardError
from ...models import AtomicPredicate, Formula, Op, Symbol
from ...models import formula as fm
from ..ltl.propositional import Cube, is_consistent, to_dnf
from .nba import Nba

logger = logging.getLogger(__name__)

DEFAULT_ATOM_LIMIT = 20
DEFAULT_PRODUCT_LIMIT = 65536


@dataclass(frozen=True)
class SymbolSet:
    """Feasible symbols of a guard, restricted to the guard's own atoms."""
    atoms: FrozenSet[AtomicPredicate]
    symbols: Tuple[Symbol, ...]

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self.symbols


def cube_is_feasible(cube: Cube) -> bool:
    """A cube has a feasible model iff it is consistent, names at most one region per
    robot positively and never asks for a robot to stand on an obstacle."""
    if not is_consistent(cube):
        return False
    robots = set()
    for pred, positive in cube:
        if not positive:
            continue
        if pred.is_obstacle or pred.robot in robots:
            return False
        robots.add(pred.robot)
    return True


def has_feasible_symbol(guard: Formula) -> bool:
    return any(cube_is_feasible(c) for c in to_dnf(guard))


class _RobotGroups:
    """Union-find over robot indices."""

    def __init__(self):
        self.parent: Dict[int, int] = {}

    def find(self, robot: int) -> int:
        self.parent.setdefault(robot, robot)
        while self.parent[robot] != robot:
            self.parent[robot] = self.parent[self.parent[robot]]
            robot = self.parent[robot]
        return robot

    def join(self, robots) -> None:
        robots = sorted(robots)
        for other in robots[1:]:
            self.parent[self.find(other)] = self.find(robots[0])


def _split(guard: Formula) -> List[List[Formula]]:
    """Top-level conjuncts grouped so that no robot appears in two groups."""
    conjuncts = fm.flatten(guard, Op.AND)
    groups = _RobotGroups()
    for part in conjuncts:
        groups.join({p.robot for p in part.atoms})
    split: Dict[Optional[int], List[Formula]] = {}
    for part in conjuncts:
        robots = sorted(p.robot for p in part.atoms)
        root = groups.find(robots[0]) if robots else None
        split.setdefault(root, []).append(part)
    return [split[k] for k in sorted(split, key=lambda k: (k is not None, k or 0))]


def _group_symbols(parts: List[Formula], atom_limit: int) -> List[Symbol]:
    atoms = frozenset().union(*(p.atoms for p in parts))
    if len(atoms) > atom_limit:
        names = ", ".join(a.name for a in sorted(atoms))
        raise SymbolBudgetError(
            f"guard block over {len(atoms)} predicates exceeds the limit of {atom_limit}: {names}"
        )
    by_robot: Dict[int, List[Optional[AtomicPredicate]]] = {}
    for pred in sorted(atoms):
        options = by_robot.setdefault(pred.robot, [None])
        if not pred.is_obstacle:
            options.append(pred)
    conjunction = fm.conj_all(parts)
    found = []
    for choice in product(*(by_robot[r] for r in sorted(by_robot))):
        holding = frozenset(p for p in choice if p is not None)
        if conjunction.evaluate(holding):
            found.append(Symbol(holding))
    return found


def enumerate_feasible_symbols(guard: Formula, atom_limit: int = DEFAULT_ATOM_LIMIT,
                               product_limit: int = DEFAULT_PRODUCT_LIMIT) -> SymbolSet:
    """All feasible symbols over the guard's atoms that satisfy it, in key order.

    A symbol is feasible when it holds at most one region predicate per robot and no
    obstacle predicate. Conjuncts that share no robot are enumerated separately and
    combined, so `atom_limit` bounds each independent block rather than the guard.

    Raises:
        TemporalGuardError: If the guard has temporal operators.
        SymbolBudgetError: If a block or the combined product exceeds its limit.
    """
    if not guard.is_propositional:
        raise TemporalGuardError(f"guard {guard} contains temporal operators")
    combined = [frozenset()]
    for parts in _split(guard):
        options = _group_symbols(parts, atom_limit)
        if len(combined) * len(options) > product_limit:
            raise SymbolBudgetError(
                f"guard {guard} has more than {product_limit} feasible symbols"
            )
        combined = [c | s.predicates for c in combined for s in options]
        if not combined:
            break
    symbols = sorted({Symbol(c) for c in combined}, key=lambda s: s.key)
    return SymbolSet(atoms=guard.atoms, symbols=tuple(symbols))


def prune(a: Nba) -> Nba:
    """Drop every transition whose guard has no feasible symbol; states are kept."""
    kept = [t for t in a.transitions if has_feasible_symbol(t.guard)]
    removed = len(a.transitions) - len(kept)
    logger.info(f"Pruned {removed} of {len(a.transitions)} transitions as infeasible")
    for t in a.transitions:
        if t not in kept:
            logger.debug(f"Infeasible transition {t.source} -> {t.target}: {t.guard}")
    return a.with_transitions(kept)
