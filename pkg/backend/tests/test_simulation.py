"""
End-to-end tests: compile scenarios and run missions.
"""

import pytest

from app.config import Settings
from app.exceptions import CompileInfeasibleError
from app.services.simulation import (
    compile_mission,
    parse_scenario,
    read_trace,
    resolve_settings,
    run,
    write_metrics,
    write_trace,
)


def _run(scenario, settings=None, **kwargs):
    settings = resolve_settings(settings or Settings(check_invariants=True), scenario)
    return run(scenario, settings, **kwargs)


def _kinds(events):
    return [e.kind for e in events]


def test_sequence_mission_is_satisfied(load_fixture):
    """Visit l1 then l2 around the wall without ever touching an obstacle."""
    result = _run(load_fixture("sequence.json"))
    assert result.outcome == "satisfied"
    assert "safety-violation" not in _kinds(result.events)
    m = result.metrics
    assert m.accept_count == 2
    assert m.first_accept_tick < m.second_accept_tick <= 200
    assert m.map_updates == m.ticks + 1


def test_patrol_graph_and_run(load_fixture):
    scenario = load_fixture("patrol.json")
    settings = resolve_settings(Settings(check_invariants=True), scenario)
    stats = compile_mission(scenario, settings).stats()
    assert stats["aux_distance"] == 2
    assert len(stats["accepting_nodes"]) == 1
    assert stats["accepting_cycle"] is True
    assert run(scenario, settings).outcome == "satisfied"


def test_until_depends_on_initial_region(load_fixture):
    """Starting in l1 the until is not decomposable; starting in l2 it holds at once."""
    with pytest.raises(CompileInfeasibleError) as exc_info:
        _run(load_fixture("until_in_l1.json"))
    assert "disconnected graph G" in str(exc_info.value)

    assert _run(load_fixture("until_in_l2.json")).outcome == "satisfied"


def test_shared_region_is_compile_infeasible(load_fixture):
    with pytest.raises(CompileInfeasibleError):
        _run(load_fixture("shared_region.json"))


def test_reroute_after_discovering_enclosed_goal(load_fixture):
    """Region A turns out to be walled in; the robot switches to B and finishes."""
    result = _run(load_fixture("reroute.json"))
    events = result.events
    selections = [e.payload["symbol"] for e in events if e.kind == "symbol-selected"]
    assert ["pi_1_A"] in selections
    assert ["pi_1_B"] in selections
    assert selections.index(["pi_1_A"]) < selections.index(["pi_1_B"])
    unreachable = [e for e in events if e.kind == "replan" and e.payload["reachable"] is False]
    assert unreachable
    assert result.outcome == "satisfied"


def test_larger_sensing_range_never_finishes_later(scenario_data):
    ticks = []
    for sensing_range in (1, 2, 4, 8):
        data = scenario_data("barrier.json")
        data["robots"][0]["sensing_range"] = sensing_range
        result = _run(parse_scenario(data))
        assert result.outcome == "satisfied"
        ticks.append(result.metrics.first_accept_tick)
    assert ticks == sorted(ticks, reverse=True)


def test_two_robot_mission(load_fixture):
    result = _run(load_fixture("two_robots.json"))
    assert result.outcome == "satisfied"
    assert "safety-violation" not in _kinds(result.events)
    assert result.metrics.messages > 0


def _transitions(result):
    return [(e.payload["source"], e.payload["target"]) for e in result.events if e.kind == "transition"]


@pytest.mark.parametrize("periods", [(a, b) for a in (1, 2, 3) for b in (1, 2, 3)])
def test_step_periods_do_not_change_state_sequence(scenario_data, periods):
    """Robots moving at different rates still drive the automaton through the same states."""
    data = scenario_data("two_robots.json")
    baseline = _run(parse_scenario(data))
    for robot, period in zip(data["robots"], periods):
        robot["step_period"] = period
    data["budget"] = 1200
    result = _run(parse_scenario(data))
    assert result.outcome == "satisfied"
    assert "safety-violation" not in _kinds(result.events)
    assert _transitions(result) == _transitions(baseline)


def test_zero_budget(load_fixture):
    scenario = load_fixture("minimal.json")
    result = run(scenario, Settings(tick_budget=0))
    assert result.outcome == "budget-exhausted"
    assert result.events == []
    assert result.metrics.ticks == 0


def test_small_budget_is_exhausted(load_fixture):
    result = _run(load_fixture("sequence.json"), Settings(tick_budget=3))
    assert result.outcome == "budget-exhausted"
    assert result.metrics.ticks == 3


def test_runs_are_deterministic(load_fixture, tmp_path):
    scenario = load_fixture("sequence.json")
    first = _run(scenario)
    second = _run(scenario)
    assert [e.to_line() for e in first.events] == [e.to_line() for e in second.events]

    path = tmp_path / "trace.jsonl"
    write_trace(first.events, path)
    assert read_trace(path) == first.events


def test_on_event_sees_every_event(load_fixture):
    seen = []
    result = _run(load_fixture("minimal.json"), on_event=seen.append)
    assert seen == result.events
    assert seen[0].tick == 0


def test_hoa_mission(load_fixture):
    result = _run(load_fixture("hoa_scenario.json"))
    assert result.outcome == "satisfied"


def test_write_metrics(load_fixture, tmp_path):
    result = _run(load_fixture("minimal.json"))
    path = tmp_path / "metrics.json"
    write_metrics(result.metrics, path)
    text = path.read_text()
    assert '"outcome": "satisfied"' in text
    assert '"map_updates"' in text


def _corridor_scenario(robots):
    return parse_scenario({
        "grid": {"width": 100, "height": 100},
        "regions": {"goal": {"cells": [[95, 2 * j - 1] for j in range(1, robots + 1)]}},
        "robots": [{"start": [2, 2 * j - 1], "sensing_range": 2} for j in range(1, robots + 1)],
        "formula": "F (" + " & ".join(f"pi_{j}_goal" for j in range(1, robots + 1)) + ")",
        "budget": 400,
    })


@pytest.mark.slow
def test_planning_time_does_not_grow_with_team_size():
    """Each robot plans locally, so the mean planning time stays flat as robots are added."""
    means = {}
    for robots in (1, 10, 50):
        scenario = _corridor_scenario(robots)
        samples = []
        for _ in range(3):
            result = _run(scenario, Settings(check_invariants=False))
            assert result.outcome == "satisfied"
            samples.append(result.metrics.mean_plan_ms)
        means[robots] = min(samples)
    assert means[50] <= 2.0 * means[1]
    assert means[10] <= 2.0 * means[1]
