"""
Tests for scenario loading and validation.
"""

import json

import numpy as np
import pytest

from app.exceptions import ScenarioError
from app.models import Symbol
from app.services.simulation import load_scenario, parse_scenario


def test_load_minimal(load_fixture):
    scenario = load_fixture("minimal.json")
    assert (scenario.env.width, scenario.env.height) == (5, 5)
    assert scenario.env.regions["l1"] == frozenset({(4, 4)})
    assert scenario.starts == {1: (0, 0)}
    assert scenario.formula.text == "F pi_1_l1"
    assert scenario.budget is None
    assert scenario.seed == 0
    assert scenario.initial_symbol() == Symbol()


def test_walls_and_rectangles(load_fixture):
    scenario = load_fixture("sequence.json")
    assert {(5, y) for y in range(7)} <= scenario.env.obstacles
    assert len(scenario.env.regions["l1"]) == 4
    assert scenario.budget == 200
    assert scenario.seed == 7
    robots = scenario.robot_states()
    assert robots[0].robot == 1
    assert robots[0].sensing_range == 2.0


def test_hoa_scenario(load_fixture):
    scenario = load_fixture("hoa_scenario.json")
    assert scenario.formula is None
    assert "HOA: v1" in scenario.hoa_text
    assert scenario.atom_map["a"].name == "pi_1_l1"
    assert scenario.initial_symbol() == Symbol.of("pi_1_l1")


@pytest.mark.parametrize("change, field_path", [
    (lambda d: d.pop("grid"), "grid"),
    (lambda d: d["grid"].update(width=0), "grid.width"),
    (lambda d: d.update(robots=[]), "robots"),
    (lambda d: d["robots"][0].update(sensing_range=0.5), "robots.0.sensing_range"),
    (lambda d: d["robots"][0].update(step_period=0), "robots.0.step_period"),
    (lambda d: d.update(clutter=1.0), "clutter"),
    (lambda d: d["robots"][0].update(start=[9, 9]), "robots.0.start"),
    (lambda d: d.update(obstacles=[[0, 0]]), "robots.0.start"),
    (lambda d: d.update(obstacles=[[4, 4]]), "regions.l1"),
    (lambda d: d.update(formula="F pi_1_l7"), "formula"),
    (lambda d: d.update(formula="F pi_2_l1"), "formula"),
    (lambda d: d.update(formula="X pi_1_l1"), "formula"),
])
def test_validation_errors(scenario_data, change, field_path):
    """Every rejection names the offending field."""
    data = scenario_data("minimal.json")
    change(data)
    with pytest.raises(ScenarioError) as exc_info:
        parse_scenario(data)
    assert exc_info.value.field_path == field_path


def test_formula_and_hoa_are_exclusive(scenario_data):
    data = scenario_data("minimal.json")
    data["hoa"] = "g_a.hoa"
    with pytest.raises(ScenarioError) as exc_info:
        parse_scenario(data)
    assert "exactly one of formula or hoa" in str(exc_info.value)
    del data["hoa"]
    del data["formula"]
    with pytest.raises(ScenarioError):
        parse_scenario(data)


def test_atom_map_must_name_declared_predicates(scenario_data, fixtures_dir, tmp_path):
    (tmp_path / "g_a.hoa").write_text((fixtures_dir / "g_a.hoa").read_text())
    (tmp_path / "g_a.atoms").write_text("a = pi_1_kitchen\n")
    with pytest.raises(ScenarioError) as exc_info:
        parse_scenario(scenario_data("hoa_scenario.json"), base_dir=tmp_path)
    assert exc_info.value.field_path == "atom_map"


def test_missing_hoa_file(scenario_data, tmp_path):
    with pytest.raises(ScenarioError) as exc_info:
        parse_scenario(scenario_data("hoa_scenario.json"), base_dir=tmp_path)
    assert exc_info.value.field_path == "hoa"


def test_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{\"grid\": ")
    with pytest.raises(ScenarioError) as exc_info:
        load_scenario(path)
    assert "invalid JSON" in str(exc_info.value)
    with pytest.raises(ScenarioError):
        load_scenario(tmp_path / "absent.json")


def test_clutter_is_seeded(scenario_data):
    data = scenario_data("minimal.json")
    data["clutter"] = 0.3
    scenario = parse_scenario(data)
    first = scenario.environment(np.random.default_rng(1))
    second = scenario.environment(np.random.default_rng(1))
    assert first.obstacles == second.obstacles
    assert first.obstacles
    assert (0, 0) not in first.obstacles
    assert not first.obstacles & first.regions["l1"]
    assert parse_scenario(json.loads(json.dumps(data))).clutter == 0.3


@pytest.mark.parametrize("ap, label", [("pi_2_l1", "[!0] 0"), ("pi_1_kitchen", "[0] 0")])
def test_hoa_predicates_must_be_declared(scenario_data, fixtures_dir, tmp_path, ap, label):
    """Without an atom map the HOA proposition names themselves must be declared predicates."""
    hoa = (fixtures_dir / "g_a.hoa").read_text().replace('AP: 1 "a"', f'AP: 1 "{ap}"').replace("[0] 0", label)
    (tmp_path / "g_a.hoa").write_text(hoa)
    data = scenario_data("hoa_scenario.json")
    del data["atom_map"]
    with pytest.raises(ScenarioError) as exc_info:
        parse_scenario(data, base_dir=tmp_path)
    assert exc_info.value.field_path == "hoa"
    assert ap in str(exc_info.value)


def test_malformed_hoa_names_field(scenario_data, tmp_path):
    (tmp_path / "g_a.hoa").write_text("HOA: v2\n--BODY--\n--END--\n")
    (tmp_path / "g_a.atoms").write_text("a = pi_1_l1\n")
    with pytest.raises(ScenarioError) as exc_info:
        parse_scenario(scenario_data("hoa_scenario.json"), base_dir=tmp_path)
    assert exc_info.value.field_path == "hoa"


def test_hoa_scenario_keeps_imported_automaton(load_fixture):
    scenario = load_fixture("hoa_scenario.json")
    assert scenario.automaton is not None
    assert {p.name for p in scenario.automaton.atoms} == {"pi_1_l1"}
