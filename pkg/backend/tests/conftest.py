"""Test configuration and fixtures."""
import json
import sys
from pathlib import Path

import pytest

# Add backend directory to Python path
backend_dir = str(Path(__file__).parent.parent)
if backend_dir not in sys.path:
    sys.path.insert(0, backend_dir)

from app.config import Settings
from app.models import Symbol
from app.services.automaton import prune, translate
from app.services.decomposition import add_aux_state, build_graph
from app.services.ltl import parse_ltl
from app.services.simulation import load_scenario
from app.services.world import Environment

FIXTURES = Path(__file__).parent / "fixtures"


def compile_formula(text: str, initial: Symbol = Symbol(), **kwargs):
    """Translate, prune, add aux and build the decomposition graph."""
    pruned = prune(translate(parse_ltl(text)))
    return build_graph(add_aux_state(pruned, initial), initial, **kwargs)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def load_fixture():
    """Load a scenario fixture by file name."""
    def _load(name: str):
        return load_scenario(FIXTURES / name)
    return _load


@pytest.fixture
def scenario_data():
    """Raw JSON of a scenario fixture, for tests that tweak fields."""
    def _data(name: str) -> dict:
        return json.loads((FIXTURES / name).read_text())
    return _data


@pytest.fixture
def settings() -> Settings:
    return Settings(check_invariants=True)


@pytest.fixture
def open_env() -> Environment:
    """10x10 obstacle-free grid with two corner regions."""
    return Environment(
        width=10,
        height=10,
        obstacles=frozenset(),
        regions={
            "l1": frozenset({(1, 1), (1, 2), (2, 1), (2, 2)}),
            "l2": frozenset({(7, 7), (7, 8), (8, 7), (8, 8)}),
        },
    )
