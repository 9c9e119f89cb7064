"""Per-robot separability of transition guards."""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ...models import Formula
from ..automaton.nba import Nba
from ..ltl.propositional import Clause, format_clause, from_cnf, to_cnf


@dataclass(frozen=True)
class SeparabilityReport:
    """CNF of a guard and, when every clause names a single robot, its per-robot split."""
    guard: Formula
    clauses: Tuple[Clause, ...]
    holds: bool
    per_robot: Dict[int, Formula] = field(default_factory=dict)
    offending: Optional[Clause] = None

    @property
    def message(self) -> str:
        if self.holds:
            return "guard is robot-separable"
        robots = ",".join(str(r) for r in sorted({p.robot for p, _ in self.offending}))
        return f"guard is not robot-separable: clause {format_clause(self.offending)} spans robots {{{robots}}}"


def check_robot_separable(guard: Formula) -> SeparabilityReport:
    """Check that every CNF clause of the guard talks about one robot only.

    When it does, the guard is the conjunction of one sub-guard per robot, each made of
    that robot's clauses, so robots can satisfy their parts independently.
    """
    clauses = to_cnf(guard)
    by_robot: Dict[int, List[Clause]] = {}
    for clause in clauses:
        robots = {p.robot for p, _ in clause}
        if len(robots) > 1:
            return SeparabilityReport(guard=guard, clauses=tuple(clauses), holds=False, offending=clause)
        for robot in robots:
            by_robot.setdefault(robot, []).append(clause)
    per_robot = {robot: from_cnf(by_robot[robot]) for robot in sorted(by_robot)}
    return SeparabilityReport(guard=guard, clauses=tuple(clauses), holds=True, per_robot=per_robot)


def separability_table(a: Nba) -> List[Tuple[str, str, SeparabilityReport]]:
    """One report per automaton transition, in transition order."""
    return [(t.source, t.target, check_robot_separable(t.guard)) for t in a.transitions]
