"""DOT and JSON exports of the decomposition graph."""
import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterator

import jsonschema

from ...config import load_graph_schema
from ...models import Symbol
from ..automaton.dot import quote
from ..automaton.nba import state_key
from .types import DecompGraph, GraphEdge, SymbolAssignment

logger = logging.getLogger(__name__)


def _dist_label(g: DecompGraph, node: str) -> str:
    d = g.dist.get(node)
    return "inf" if d is None else str(d)


def _lines(g: DecompGraph) -> Iterator[str]:
    yield "digraph decomposition {"
    yield "  rankdir=LR;"
    for node in g.nodes:
        shape = "doublecircle" if node in g.vf else "circle"
        label = quote(f"{node} d={_dist_label(g, node)}")
        yield f"  {quote(node)} [shape={shape}, label={label}];"
    yield "  \"__start\" [shape=point];"
    yield f"  \"__start\" -> {quote(g.initial)};"
    for e in g.edges:
        style = "dashed" if e.accepting else "solid"
        yield f"  {quote(e.source)} -> {quote(e.target)} [label={quote(str(e.run))}, style={style}];"
    yield "}"


def graph_to_dot(g: DecompGraph) -> str:
    """DOT digraph of G: accepting edges dashed, distance to the accepting nodes on each node."""
    return "\n".join(_lines(g)) + "\n"


def _symbol_names(symbol: Symbol) -> list:
    return [p.name for p in symbol.key]


def _assignment_document(assignment: SymbolAssignment) -> Dict[str, Any]:
    return {
        "symbol": _symbol_names(assignment.symbol),
        "involved": sorted(assignment.involved),
        "constrained": sorted(assignment.constrained),
        "goals": {str(robot): str(goal) for robot, goal in assignment.goals},
        "admissible_for": sorted(_symbol_names(s) for s in assignment.admissible_for),
    }


def _edge_document(e: GraphEdge) -> Dict[str, Any]:
    return {
        "source": e.source,
        "target": e.target,
        "run": list(e.run.path),
        "hops": e.run.hops,
        "guard": e.guard.text,
        "accepting": e.accepting,
        "assignments": [_assignment_document(a) for a in e.assignments],
    }


def graph_to_document(g: DecompGraph) -> Dict[str, Any]:
    """Structured form of G, validated against the bundled JSON schema."""
    document = {
        "initial": g.initial,
        "nodes": [
            {
                "name": node,
                "accepting": node in g.vf,
                "dist": g.dist.get(node),
                "loop_guard": g.loop_guards[node].text if node in g.loop_guards else None,
            }
            for node in g.nodes
        ],
        "accepting_nodes": sorted(g.vf, key=state_key),
        "edges": [_edge_document(e) for e in g.edges],
        "truncated_runs": g.truncated_runs,
    }
    jsonschema.validate(instance=document, schema=load_graph_schema())
    return document


def write_graph(g: DecompGraph, path: Path) -> None:
    document = graph_to_document(g)
    path.write_text(json.dumps(document, indent=2) + "\n")
    logger.info(f"Wrote decomposition graph to {path}")
