"""Scenario loading and semantic validation."""
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import ValidationError

from ...exceptions import HoaFormatError, LtlSyntaxError, ScenarioError
from ...models import AtomicPredicate, Formula, ScenarioDocument, Symbol
from ..automaton.hoa import import_hoa, load_atom_map
from ..automaton.nba import Nba
from ..ltl.parser import parse_ltl
from ..world import Cell, Environment, RobotState, label

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RobotSetup:
    start: Cell
    sensing_range: float
    step_period: int


@dataclass(frozen=True)
class Scenario:
    """Validated scenario: world, robots and the mission as a formula or an HOA automaton."""
    env: Environment
    robots: Tuple[RobotSetup, ...]
    formula: Optional[Formula] = None
    hoa_text: Optional[str] = None
    automaton: Optional[Nba] = None
    atom_map: Optional[Dict[str, AtomicPredicate]] = None
    budget: Optional[int] = None
    seed: int = 0
    hop_cap: Optional[int] = None
    clutter: float = 0.0

    @property
    def starts(self) -> Dict[int, Cell]:
        return {j: r.start for j, r in enumerate(self.robots, start=1)}

    def robot_states(self) -> List[RobotState]:
        """Fresh robot states at the start cells."""
        return [
            RobotState(robot=j, cell=r.start, step_period=r.step_period, sensing_range=r.sensing_range)
            for j, r in enumerate(self.robots, start=1)
        ]

    def initial_symbol(self) -> Symbol:
        return label(self.starts, self.env)

    def environment(self, rng: np.random.Generator) -> Environment:
        """Ground truth used for a run, with random clutter drawn from rng when requested."""
        if not self.clutter:
            return self.env
        return self.env.with_clutter(self.clutter, rng, keep=self.starts.values())


def _field_path(error: dict) -> str:
    return ".".join(str(part) for part in error["loc"])


def parse_scenario(data: dict, base_dir: Optional[Path] = None) -> Scenario:
    """Validate a scenario document.

    Raises:
        ScenarioError: On schema violations (with the offending field path), overlapping
            regions or obstacles, robots starting on obstacles, malformed HOA automata and
            undeclared predicates.
    """
    try:
        doc = ScenarioDocument.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise ScenarioError(first["msg"], _field_path(first)) from None
    env = Environment(
        width=doc.grid.width,
        height=doc.grid.height,
        obstacles=frozenset(doc.obstacle_cells()),
        regions={name: frozenset(spec.expand()) for name, spec in doc.regions.items()},
    )
    robots = []
    for i, spec in enumerate(doc.robots):
        start = tuple(spec.start)
        if not env.in_bounds(start):
            raise ScenarioError(f"start {start} is out of bounds", f"robots.{i}.start")
        if env.is_obstacle(start):
            raise ScenarioError(f"start {start} is on an obstacle", f"robots.{i}.start")
        robots.append(RobotSetup(start=start, sensing_range=spec.sensing_range, step_period=spec.step_period))

    formula = hoa_text = atom_map = automaton = None
    if doc.formula is not None:
        try:
            formula = parse_ltl(doc.formula, robots=len(robots), regions=env.region_names)
        except LtlSyntaxError as e:
            raise ScenarioError(str(e), "formula") from e
    else:
        base_dir = base_dir or Path.cwd()
        hoa_text = _read(base_dir / doc.hoa, "hoa")
        if doc.atom_map is not None:
            try:
                atom_map = load_atom_map(_read(base_dir / doc.atom_map, "atom_map"))
            except HoaFormatError as e:
                raise ScenarioError(str(e), "atom_map") from e
            for name, pred in atom_map.items():
                if not _is_declared(pred, len(robots), env):
                    raise ScenarioError(f"'{name}' maps to undeclared predicate {pred}", "atom_map")
        try:
            automaton = import_hoa(hoa_text, atom_map)
        except HoaFormatError as e:
            raise ScenarioError(str(e), "hoa") from e
        undeclared = sorted(p for p in automaton.atoms if not _is_declared(p, len(robots), env))
        if undeclared:
            names = ", ".join(p.name for p in undeclared)
            raise ScenarioError(f"automaton uses undeclared predicates {names}", "hoa")

    return Scenario(
        env=env, robots=tuple(robots), formula=formula, hoa_text=hoa_text, automaton=automaton, atom_map=atom_map,
        budget=doc.budget, seed=doc.seed, hop_cap=doc.hop_cap, clutter=doc.clutter,
    )


def _is_declared(pred: AtomicPredicate, robots: int, env: Environment) -> bool:
    return 1 <= pred.robot <= robots and (pred.is_obstacle or pred.target in env.regions)


def _read(path: Path, field_path: str) -> str:
    try:
        return path.read_text()
    except OSError as e:
        raise ScenarioError(f"cannot read {path}: {e.strerror}", field_path) from e


def load_scenario(path) -> Scenario:
    """Load and validate a scenario JSON file; HOA and atom-map paths resolve next to it."""
    path = Path(path)
    text = _read(path, "")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from e
    scenario = parse_scenario(data, base_dir=path.parent)
    logger.info(
        f"Loaded scenario {path.name}: {scenario.env.width}x{scenario.env.height} grid, "
        f"{len(scenario.robots)} robots, {len(scenario.env.regions)} regions"
    )
    return scenario
