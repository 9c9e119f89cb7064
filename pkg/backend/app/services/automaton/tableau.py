"""Tableau translation of LTL formulas into Buchi automata.

Formulas are expanded into covers in the style of Gerth, Peled, Vardi and Wolper,
using a worklist instead of recursion. The generalized acceptance condition (one set
per until subformula) is degeneralized with a jump-ahead counter, states that cannot reach an
accepting cycle are trimmed, and the result is quotiented by forward bisimulation.
"""
import logging
from collections import deque
from typing import Dict, FrozenSet, List, Tuple

import networkx as nx

from ...models import Formula, Op
from ...models import formula as fm
from ..ltl.normal_form import to_nnf
from ..ltl.propositional import Cube, from_dnf, minimal_terms, term_key
from .nba import Nba

logger = logging.getLogger(__name__)

INIT = -1

# (cube, next obligations, acceptance vector)
_NodeKey = Tuple[Cube, FrozenSet[Formula], Tuple[bool, ...]]
_State = Tuple[int, int]


def _text(f: Formula) -> str:
    return f.text


def _complement(f: Formula) -> Formula:
    return f.args[0] if f.op == Op.NOT else fm.neg(f)


def _untils(f: Formula) -> List[Formula]:
    found = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if node.op == Op.UNTIL:
            found.add(node)
        stack.extend(node.args)
    return sorted(found, key=_text)


def expand(obligations: FrozenSet[Formula]) -> List[Tuple[FrozenSet[Formula], FrozenSet[Formula]]]:
    """All consistent covers (old, next) of a set of NNF obligations."""
    covers = []
    stack = [(frozenset(obligations), frozenset(), frozenset())]
    while stack:
        new, old, nxt = stack.pop()
        if not new:
            covers.append((old, nxt))
            continue
        eta = min(new, key=_text)
        new = new - {eta}
        if eta in old:
            stack.append((new, old, nxt))
            continue
        if eta.is_false:
            continue
        old = old | {eta}
        op = eta.op
        if op == Op.TRUE:
            stack.append((new, old, nxt))
        elif eta.is_literal:
            if _complement(eta) not in old:
                stack.append((new, old, nxt))
        elif op == Op.AND:
            stack.append((new | {eta.left, eta.right}, old, nxt))
        elif op == Op.OR:
            stack.append((new | {eta.right}, old, nxt))
            stack.append((new | {eta.left}, old, nxt))
        elif op == Op.UNTIL:
            stack.append((new | {eta.right}, old, nxt))
            stack.append((new | {eta.left}, old, nxt | {eta}))
        elif op == Op.ALWAYS:
            stack.append((new | {eta.args[0]}, old, nxt | {eta}))
        else:
            raise ValueError(f"formula {eta} is not in negation normal form")
    return covers


class TableauTranslator:
    """Builds the automaton of one NNF formula."""

    def __init__(self, formula: Formula):
        self.formula = formula
        self.untils = _untils(formula)
        self.keys: List[_NodeKey] = []
        self.ids: Dict[_NodeKey, int] = {}
        self.succ: Dict[int, List[int]] = {}

    def _node_key(self, old: FrozenSet[Formula], nxt: FrozenSet[Formula]) -> _NodeKey:
        cube = frozenset(
            (f.atom, True) if f.op == Op.ATOM else (f.args[0].atom, False)
            for f in old if f.is_literal
        )
        acc = tuple(u not in old or u.right in old for u in self.untils)
        return cube, nxt, acc

    def _successors(self, obligations: FrozenSet[Formula]) -> List[int]:
        keys = {self._node_key(old, nxt) for old, nxt in expand(obligations)}
        ordered = sorted(keys, key=lambda k: (term_key(k[0]), sorted(map(_text, k[1])), k[2]))
        result = []
        for key in ordered:
            if key not in self.ids:
                self.ids[key] = len(self.keys)
                self.keys.append(key)
            result.append(self.ids[key])
        return result

    def build_nodes(self) -> None:
        self.succ[INIT] = self._successors(frozenset({self.formula}))
        queue = deque(self.succ[INIT])
        while queue:
            node = queue.popleft()
            if node in self.succ:
                continue
            self.succ[node] = self._successors(self.keys[node][1])
            queue.extend(n for n in self.succ[node] if n not in self.succ)

    def label(self, node: int) -> Cube:
        return self.keys[node][0]

    def _jump(self, node: int, counter: int) -> Tuple[bool, int]:
        """Skip every set the node meets from `counter` on.

        Returns whether the last set was passed (the state is final) and the counter
        for the successors. After a wrap the node's own sets are skipped again, so a
        node meeting all sets keeps counter 0 and its stutter loop.
        """
        k = len(self.untils)
        if node == INIT:
            return False, counter
        if k == 0:
            return True, 0
        acc = self.keys[node][2]
        j = counter
        while j < k and acc[j]:
            j += 1
        if j < k:
            return False, j
        j = 0
        while j < k and acc[j]:
            j += 1
        return True, j % k

    def degeneralize(self) -> Tuple[nx.DiGraph, set]:
        """Counter construction with jump-ahead over the sets the source already meets."""
        graph = nx.DiGraph()
        start = (INIT, 0)
        graph.add_node(start)
        final = set()
        queue = deque([start])
        while queue:
            state = queue.popleft()
            node, counter = state
            accepting, nxt_counter = self._jump(node, counter)
            if accepting:
                final.add(state)
            for target in self.succ[node]:
                succ = (target, nxt_counter)
                if succ not in graph:
                    queue.append(succ)
                graph.add_edge(state, succ, cube=self.label(target))
        return graph, final

    def translate(self) -> Nba:
        self.build_nodes()
        graph, final = self.degeneralize()
        keep = _live_states(graph, final)
        if (INIT, 0) not in keep:
            logger.info(f"Formula {self.formula} is unsatisfiable; returning the empty automaton")
            return Nba.from_edges(["q0"], ["q0"], [], [])
        graph = graph.subgraph(keep).copy()
        return _quotient(graph, final & keep)


def _live_states(graph: nx.DiGraph, final: set) -> set:
    """States from which an accepting cycle is reachable."""
    live = set()
    for component in nx.strongly_connected_components(graph):
        if not component & final:
            continue
        node = next(iter(component))
        if len(component) > 1 or graph.has_edge(node, node):
            live |= component
    for node in list(live):
        live |= nx.ancestors(graph, node)
    return live


def _signature(graph: nx.DiGraph, state: _State, block: Dict[_State, int]):
    return frozenset((data["cube"], block[t]) for _, t, data in graph.out_edges(state, data=True))


def _quotient(graph: nx.DiGraph, final: set) -> Nba:
    states = sorted(graph.nodes)
    block = {s: int(s in final) for s in states}
    count = len(set(block.values()))
    while True:
        ids: Dict[tuple, int] = {}
        refined = {}
        for s in states:
            sig = (block[s], _signature(graph, s, block))
            refined[s] = ids.setdefault(sig, len(ids))
        block = refined
        if len(ids) == count:
            break
        count = len(ids)

    start = (INIT, 0)
    members: Dict[int, List[_State]] = {}
    for s in states:
        members.setdefault(block[s], []).append(s)
    if len(members[block[start]]) == 1:
        own = _signature(graph, start, block)
        for b in sorted(members, key=lambda b: min(members[b])):
            if b != block[start] and _signature(graph, members[b][0], block) == own:
                del members[block[start]]
                block[start] = b
                members[b].append(start)
                break

    names: Dict[int, str] = {}
    order = deque([block[start]])
    while order:
        b = order.popleft()
        if b in names:
            continue
        names[b] = f"q{len(names)}"
        targets = {block[t] for _, t in graph.out_edges(members[b][0])}
        order.extend(sorted(targets - set(names), key=lambda t: min(members[t])))

    edges = []
    for b, name in names.items():
        cubes: Dict[int, List[Cube]] = {}
        for _, t, data in graph.out_edges(members[b][0], data=True):
            cubes.setdefault(block[t], []).append(data["cube"])
        for t, found in cubes.items():
            edges.append((name, from_dnf(minimal_terms(found)), names[t]))
    final_names = [names[b] for b in names if any(s in final for s in members[b])]
    return Nba.from_edges(names.values(), [names[block[start]]], final_names, edges)


def translate(f: Formula) -> Nba:
    """Buchi automaton accepting exactly the words that satisfy f."""
    nnf = to_nnf(f)
    nba = TableauTranslator(nnf).translate()
    logger.info(
        f"Translated {f} into an automaton with {len(nba.states)} states "
        f"and {len(nba.transitions)} transitions"
    )
    return nba

