"""Scenario ingestion, compilation and simulated mission runs."""
from .driver import RunResult, resolve_settings, run
from .oracle import OracleReport, cross_validate, lasso_words, random_symbol
from .output import read_trace, trace_lines, write_metrics, write_trace
from .pipeline import CompiledMission, compile_mission, mission_automaton
from .scenario import RobotSetup, Scenario, load_scenario, parse_scenario

__all__ = [
    'RunResult', 'resolve_settings', 'run', 'OracleReport', 'cross_validate', 'lasso_words', 'random_symbol',
    'read_trace', 'trace_lines', 'write_metrics', 'write_trace', 'CompiledMission', 'compile_mission',
    'mission_automaton', 'RobotSetup', 'Scenario', 'load_scenario', 'parse_scenario',
]
