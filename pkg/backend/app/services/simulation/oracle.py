"""Cross-validation of the translated automaton against direct formula evaluation."""
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Sequence

import numpy as np

from ...models import AtomicPredicate, Formula, LassoWord, Symbol
from ..automaton.nba import Nba
from ..ltl.semantics import eval_lasso


@dataclass
class OracleReport:
    checked: int = 0
    accepted: int = 0
    mismatches: List[LassoWord] = field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return not self.mismatches


def random_symbol(atoms: Sequence[AtomicPredicate], rng: np.random.Generator, feasible: bool = False) -> Symbol:
    """Uniform subset of the atoms, or with `feasible` at most one region per robot and no obstacle."""
    if not feasible:
        picks = rng.random(len(atoms)) < 0.5
        return Symbol(frozenset(p for p, keep in zip(atoms, picks) if keep))
    by_robot: Dict[int, List[AtomicPredicate]] = {}
    for p in atoms:
        if not p.is_obstacle:
            by_robot.setdefault(p.robot, []).append(p)
    chosen = []
    for robot in sorted(by_robot):
        options = by_robot[robot]
        pick = int(rng.integers(0, len(options) + 1))
        if pick < len(options):
            chosen.append(options[pick])
    return Symbol(frozenset(chosen))


def lasso_words(atoms: Iterable[AtomicPredicate], count: int, rng: np.random.Generator,
                max_prefix: int = 3, max_cycle: int = 3, feasible: bool = False) -> Iterator[LassoWord]:
    """Random lasso words over all subsets of the atoms, or over feasible symbols only."""
    atoms = sorted(atoms)
    for _ in range(count):
        prefix = [random_symbol(atoms, rng, feasible) for _ in range(int(rng.integers(0, max_prefix + 1)))]
        cycle = [random_symbol(atoms, rng, feasible) for _ in range(int(rng.integers(1, max_cycle + 1)))]
        yield LassoWord(tuple(prefix), tuple(cycle))


def cross_validate(formula: Formula, automaton: Nba, words: Iterable[LassoWord]) -> OracleReport:
    """Compare automaton acceptance with formula satisfaction on each word."""
    report = OracleReport()
    for word in words:
        expected = eval_lasso(formula, word)
        report.checked += 1
        report.accepted += int(expected)
        if automaton.accepts(word) != expected:
            report.mismatches.append(word)
    return report
