"""Compile a scenario's mission into the decomposition graph."""
import logging
from dataclasses import dataclass

from ...config import Settings
from ...exceptions import CompileInfeasibleError
from ..automaton import Nba, import_hoa, prune, state_key, translate
from ..decomposition import AUX, DecompGraph, add_aux_state, build_graph, has_accepting_cycle
from .scenario import Scenario

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompiledMission:
    nba: Nba
    pruned: Nba
    with_aux: Nba
    graph: DecompGraph

    @property
    def has_accepting_cycle(self) -> bool:
        return has_accepting_cycle(self.graph)

    def stats(self) -> dict:
        g = self.graph
        return {
            "nba_states": len(self.nba.states),
            "nba_transitions": len(self.nba.transitions),
            "pruned_transitions": len(self.pruned.transitions),
            "graph_nodes": len(g.nodes),
            "graph_edges": len(g.edges),
            "accepting_nodes": sorted(g.vf, key=state_key),
            "aux_distance": g.dist.get(AUX),
            "accepting_cycle": self.has_accepting_cycle,
            "truncated_runs": g.truncated_runs,
        }


def mission_automaton(scenario: Scenario) -> Nba:
    if scenario.formula is not None:
        return translate(scenario.formula)
    if scenario.automaton is not None:
        return scenario.automaton
    return import_hoa(scenario.hoa_text, scenario.atom_map)


def compile_mission(scenario: Scenario, settings: Settings) -> CompiledMission:
    """Automaton, pruning, auxiliary start state and decomposition graph.

    Raises:
        CompileInfeasibleError: If no accepting edge can be reached from the start.
    """
    nba = mission_automaton(scenario)
    pruned = prune(nba)
    initial = scenario.initial_symbol()
    with_aux = add_aux_state(pruned, initial)
    graph = build_graph(
        with_aux, initial, settings.hop_cap, settings.symbol_atom_limit, settings.symbol_product_limit,
    )
    if graph.dist.get(AUX) is None:
        raise CompileInfeasibleError(
            f"disconnected graph G: no accepting edge is reachable from {AUX} "
            f"({len(graph.nodes)} nodes, {len(graph.edges)} edges)"
        )
    compiled = CompiledMission(nba=nba, pruned=pruned, with_aux=with_aux, graph=graph)
    if not compiled.has_accepting_cycle:
        logger.warning("No cycle through an accepting edge is reachable; the mission cannot be repeated")
    return compiled
