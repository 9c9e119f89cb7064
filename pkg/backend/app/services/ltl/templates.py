"""Formula text builders for common mission shapes.

A visit task asks every robot of a team to be inside one of a few regions at the
same time. The builders only produce formula text; feed it to `parse_ltl`.
"""
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple


@dataclass(frozen=True)
class VisitTask:
    """Every robot in `team` inside one of `regions`."""
    team: Tuple[int, ...]
    regions: Tuple[str, ...]

    def __post_init__(self):
        if not self.team or not self.regions:
            raise ValueError("a visit task needs at least one robot and one region")

    @property
    def text(self) -> str:
        per_robot = []
        for robot in self.team:
            options = " | ".join(f"pi_{robot}_{region}" for region in self.regions)
            per_robot.append(f"({options})")
        if len(per_robot) == 1:
            return per_robot[0]
        return "(" + " & ".join(per_robot) + ")"


def visit(regions: Sequence[str], team: Sequence[int] = (1,)) -> VisitTask:
    """Shorthand for a VisitTask."""
    return VisitTask(team=tuple(team), regions=tuple(regions))


def obstacle_free(robots: Sequence[int]) -> str:
    """G !(pi_1_O | ... | pi_N_O)."""
    hits = " | ".join(f"pi_{j}_O" for j in robots)
    return f"G !({hits})"


def surveillance_formula(recurrent: Sequence[VisitTask], eventual: Sequence[VisitTask],
                         robots: Sequence[int],
                         ordering: Optional[Tuple[VisitTask, VisitTask]] = None) -> str:
    """Recurrent visits, one-off visits, an optional "not a until b" ordering and obstacle avoidance."""
    parts = [f"G F {task.text}" for task in recurrent]
    parts.extend(f"F {task.text}" for task in eventual)
    if ordering is not None:
        first, second = ordering
        parts.append(f"(!{first.text} U {second.text})")
    parts.append(obstacle_free(robots))
    return " & ".join(parts)


def delivery_formula(chain: Sequence[VisitTask], robots: Sequence[int],
                     forbidden: Optional[VisitTask] = None,
                     exit_task: Optional[VisitTask] = None) -> str:
    """Visits in the given order, a region never entered, and staying at the exit eventually."""
    if not chain:
        raise ValueError("a delivery mission needs at least one visit")
    nested = f"F {chain[-1].text}"
    for task in reversed(chain[:-1]):
        nested = f"F ({task.text} & {nested})"
    parts = [nested]
    if forbidden is not None:
        parts.append(f"G !{forbidden.text}")
    parts.append(obstacle_free(robots))
    if exit_task is not None:
        parts.append(f"F G {exit_task.text}")
    return " & ".join(parts)
