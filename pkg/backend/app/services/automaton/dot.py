"""GraphViz rendering of automata."""
from typing import Iterator

from .nba import Nba, state_key


def quote(text: str) -> str:
    return '"{}"'.format(text.replace("\\", "\\\\").replace('"', r'\"'))


def _lines(a: Nba) -> Iterator[str]:
    yield "digraph nba {"
    yield "  rankdir=LR;"
    for state in a.states:
        shape = "doublecircle" if state in a.final else "circle"
        yield f"  {quote(state)} [shape={shape}];"
    for index, state in enumerate(sorted(a.initial, key=state_key)):
        entry = quote(f"__init{index}")
        yield f"  {entry} [shape=point];"
        yield f"  {entry} -> {quote(state)};"
    for t in a.transitions:
        yield f"  {quote(t.source)} -> {quote(t.target)} [label={quote(t.guard.text)}];"
    yield "}"


def export_dot(a: Nba) -> str:
    """Deterministic DOT digraph: final states double-circled, guards as edge labels."""
    return "\n".join(_lines(a)) + "\n"
