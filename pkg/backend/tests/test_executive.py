"""
Tests for the reactive mission executive.
"""

import logging

import pytest

from app.exceptions import InvariantViolation, NoCandidateError, NoSymbolError
from app.models import Symbol
from app.services.decomposition import AUX, without_edges
from app.services.executive import ACCEPT_TARGET, MissionExecutive, Phase, select_next_state, select_symbol
from app.services.world import Environment, OccupancyGrid, RobotState

from conftest import compile_formula


def _drive(executive, budget=200):
    events = executive.start()
    while not executive.done and executive.tick_count < budget:
        events.extend(executive.tick())
    return events


def _kinds(events):
    return [e.kind for e in events]


def _first_accepting_edge(g):
    return next(e for e in g.accepting_edges if e.source != e.target)


def test_reaches_region_twice(open_env):
    g = compile_formula("F pi_1_l2")
    executive = MissionExecutive(open_env, [RobotState(1, (5, 0))], g, check_invariants=True)
    events = _drive(executive)
    assert executive.outcome == "satisfied"
    assert executive.state.accept_count == ACCEPT_TARGET
    assert open_env.region_at(executive.positions[1]) == "l2"
    kinds = _kinds(events)
    assert "symbol-selected" in kinds
    assert "goal-reached" in kinds
    assert kinds.count("accepting-edge") == ACCEPT_TARGET
    assert "safety-violation" not in kinds
    metrics = executive.metrics()
    assert metrics.outcome == "satisfied"
    assert metrics.first_accept_tick <= metrics.second_accept_tick
    assert metrics.plan_calls >= 1
    assert metrics.map_updates == metrics.ticks + 1


def test_start_happens_at_tick_zero(open_env):
    g = compile_formula("F pi_1_l2")
    executive = MissionExecutive(open_env, [RobotState(1, (5, 0))], g)
    events = executive.start()
    assert events
    assert all(e.tick == 0 for e in events)
    assert executive.state.target is not None
    assert executive.tick_count == 0
    later = []
    while not executive.done and executive.tick_count < 200:
        later.extend(executive.tick())
    moves = [e for e in later if e.kind == "move"]
    assert moves and min(e.tick for e in moves) >= 1


def test_moves_follow_step_period(open_env):
    g = compile_formula("F pi_1_l2")
    executive = MissionExecutive(open_env, [RobotState(1, (0, 0), step_period=3)], g)
    events = _drive(executive, budget=300)
    moves = [e for e in events if e.kind == "move"]
    assert moves
    assert all(e.tick % 3 == 0 for e in moves)
    assert executive.outcome == "satisfied"


def test_messages_on_selection_and_arrival(open_env):
    g = compile_formula("F pi_1_l2")
    executive = MissionExecutive(open_env, [RobotState(1, (5, 0))], g)
    events = _drive(executive)
    topics = [e.payload["topic"] for e in events if e.kind == "message"]
    assert "symbol" in topics and "arrival" in topics
    assert executive.metrics().messages == len(topics)


def test_walled_goal_makes_mission_infeasible(open_env):
    """With the only goal enclosed, edges are removed until nothing is left to try."""
    ring = {(x, y) for x in range(6, 10) for y in range(6, 10)} - open_env.regions["l2"]
    env = Environment(10, 10, frozenset(ring), open_env.regions)
    g = compile_formula("F pi_1_l2")
    executive = MissionExecutive(env, [RobotState(1, (0, 0))], g)
    events = _drive(executive, budget=300)
    assert executive.outcome == "infeasible"
    kinds = _kinds(events)
    assert "edge-removed" in kinds
    assert kinds[-1] == "mission-infeasible"
    assert "safety-violation" not in kinds
    assert executive.metrics().removed_edges >= 1
    assert executive.metrics().outcome == "infeasible"


def test_blocked_path_is_replanned():
    env = Environment(12, 5, frozenset({(6, y) for y in range(0, 4)}), {"goal": frozenset({(11, 1)})})
    g = compile_formula("F pi_1_goal")
    executive = MissionExecutive(env, [RobotState(1, (0, 1))], g, check_invariants=True)
    events = _drive(executive)
    assert executive.outcome == "satisfied"
    replans = [e for e in events if e.kind == "replan"]
    assert replans
    assert all(e.payload["reachable"] for e in replans)
    assert executive.replans == len(replans)
    assert "map-delta" in _kinds(events)
    assert executive.grid.known_obstacles() <= env.obstacles


def test_self_loop_violation(open_env):
    """Leaving the held self-loop raises in checking mode and is logged otherwise."""
    g = compile_formula("G !pi_1_l1 & F pi_1_l2")
    executive = MissionExecutive(open_env, [RobotState(1, (0, 5))], g, check_invariants=True)
    executive.start()
    while executive.state.current == AUX and not executive.done:
        executive.tick()
    assert not executive.done
    executive.robots[1].cell = (1, 1)
    with pytest.raises(InvariantViolation):
        executive._check_sustained(g.loop_guards[executive.state.current], "self-loop")


def test_self_loop_violation_is_logged(open_env, caplog):
    g = compile_formula("G !pi_1_l1 & F pi_1_l2")
    executive = MissionExecutive(open_env, [RobotState(1, (0, 5))], g, check_invariants=False)
    executive.start()
    while executive.state.current == AUX and not executive.done:
        executive.tick()
    executive.robots[1].cell = (1, 1)
    with caplog.at_level(logging.WARNING):
        executive._check_sustained(g.loop_guards[executive.state.current], "self-loop")
    assert "self-loop" in caplog.text


def test_select_symbol_prefers_cheapest_goal(open_env):
    g = compile_formula("F (pi_1_l1 | pi_1_l2)")
    edge = _first_accepting_edge(g)
    grid = OccupancyGrid.for_environment(open_env)
    near_l1 = {1: RobotState(1, (0, 0))}
    assignment, paths = select_symbol(edge, Symbol(), open_env, grid, near_l1)
    assert assignment.symbol == Symbol.of("pi_1_l1")
    assert open_env.region_at(paths[1].end) == "l1"
    near_l2 = {1: RobotState(1, (9, 9))}
    assignment, _ = select_symbol(edge, Symbol(), open_env, grid, near_l2)
    assert assignment.symbol == Symbol.of("pi_1_l2")


def test_select_symbol_without_reachable_goal(open_env):
    g = compile_formula("F (pi_1_l1 | pi_1_l2)")
    edge = _first_accepting_edge(g)
    robots = {1: RobotState(1, (0, 0))}
    with pytest.raises(NoSymbolError):
        select_symbol(edge, Symbol(), open_env, OccupancyGrid.for_environment(open_env), robots,
                      planner=lambda problem, grid: None)


def test_select_next_state():
    g = compile_formula("G F pi_1_l1 & G F pi_1_l2")
    nxt = select_next_state(g, AUX)
    assert g.dist[nxt] == g.dist[AUX] - 1
    (accepting,) = g.vf
    assert g.edge(accepting, select_next_state(g, accepting)).accepting
    stripped = without_edges(g, [e.key for e in g.out_edges(accepting)])
    with pytest.raises(NoCandidateError):
        select_next_state(stripped, accepting)


def test_robot_phases(open_env):
    g = compile_formula("F pi_1_l2")
    executive = MissionExecutive(open_env, [RobotState(1, (5, 0))], g)
    assert executive.state.phases == {1: Phase.IDLE}
    _drive(executive)
    assert executive.state.phases[1] == Phase.IDLE
    assert executive.tick() == []


def _hold_accepting_symbol(env, check_invariants):
    """Drive a patrol until the robot sits on the symbol of a two-hop accepting run."""
    g = compile_formula("G F pi_1_l1 & G F pi_1_l2")
    executive = MissionExecutive(env, [RobotState(1, (0, 5))], g, check_invariants=check_invariants)
    executive.start()
    while not (executive.state.current in g.vf and executive.state.phases[1] == Phase.WAITING):
        executive.tick()
        assert executive.tick_count < 200
    edge = g.edge(executive.state.current, executive.state.target)
    assert edge.run.hops == 2
    assert executive.state.accept_count == 0
    return executive


def test_held_symbol_is_checked_while_waiting_to_fire(open_env):
    """After every robot arrives, the symbol must keep holding until the run fires."""
    executive = _hold_accepting_symbol(open_env, check_invariants=True)
    executive.robots[1].cell = (0, 0)
    with pytest.raises(InvariantViolation):
        executive.tick()


def test_held_symbol_loss_is_logged(open_env, caplog):
    executive = _hold_accepting_symbol(open_env, check_invariants=False)
    executive.robots[1].cell = (0, 0)
    with caplog.at_level(logging.WARNING):
        executive.tick()
    assert "is false under" in caplog.text
    assert executive.state.accept_count == 1


def test_waiting_on_held_symbol_passes_checks(open_env):
    executive = _hold_accepting_symbol(open_env, check_invariants=True)
    executive.tick()
    assert executive.state.accept_count == 1
