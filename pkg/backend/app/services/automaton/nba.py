"""Buchi automaton with propositional transition guards."""
import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from ...models import AtomicPredicate, Formula, LassoWord, Symbol
from ...models import formula as fm

_DIGITS = re.compile(r"(\d+)")


def state_key(state: str):
    """Natural sort key, so q2 sorts before q10."""
    return [int(part) if part.isdigit() else part for part in _DIGITS.split(state)]


@dataclass(frozen=True)
class Transition:
    source: str
    guard: Formula
    target: str


@dataclass(frozen=True)
class Nba:
    """States, initial/final subsets and at most one guarded transition per state pair."""
    states: Tuple[str, ...]
    initial: FrozenSet[str]
    final: FrozenSet[str]
    transitions: Tuple[Transition, ...]

    @classmethod
    def from_edges(cls, states: Iterable[str], initial: Iterable[str], final: Iterable[str],
                   edges: Iterable[Tuple[str, Formula, str]]) -> "Nba":
        """Build an automaton, merging parallel edges by disjunction.

        Raises:
            ValueError: If an edge or a marked state is not among `states`.
        """
        states = tuple(sorted(set(states), key=state_key))
        known = set(states)
        merged: Dict[Tuple[str, str], Formula] = {}
        for source, guard, target in edges:
            if source not in known or target not in known:
                raise ValueError(f"edge {source} -> {target} uses an unknown state")
            if not guard.is_propositional:
                raise ValueError(f"guard {guard} on {source} -> {target} is not propositional")
            pair = (source, target)
            merged[pair] = fm.disj(merged[pair], guard) if pair in merged else guard
        initial = frozenset(initial)
        final = frozenset(final)
        if not initial <= known or not final <= known:
            raise ValueError("initial and final states must be automaton states")
        transitions = tuple(
            Transition(s, g, t)
            for (s, t), g in sorted(merged.items(), key=lambda item: (state_key(item[0][0]), state_key(item[0][1])))
        )
        return cls(states=states, initial=initial, final=final, transitions=transitions)

    def with_transitions(self, transitions: Iterable[Transition]) -> "Nba":
        return Nba.from_edges(self.states, self.initial, self.final,
                              ((t.source, t.guard, t.target) for t in transitions))

    def guard(self, source: str, target: str) -> Optional[Formula]:
        return self._index.get((source, target))

    def self_loop(self, state: str) -> Optional[Formula]:
        return self._index.get((state, state))

    def successors(self, state: str) -> List[Tuple[str, Formula]]:
        """Outgoing (target, guard) pairs in state order."""
        return [(t.target, t.guard) for t in self.transitions if t.source == state]

    @property
    def _index(self) -> Dict[Tuple[str, str], Formula]:
        index = self.__dict__.get("_index_cache")
        if index is None:
            index = {(t.source, t.target): t.guard for t in self.transitions}
            object.__setattr__(self, "_index_cache", index)
        return index

    @property
    def atoms(self) -> FrozenSet[AtomicPredicate]:
        return frozenset().union(*(t.guard.atoms for t in self.transitions))

    def step(self, current: Iterable[str], symbol: Symbol) -> FrozenSet[str]:
        """States reachable from `current` by reading one symbol."""
        current = set(current)
        return frozenset(
            t.target for t in self.transitions
            if t.source in current and t.guard.evaluate(symbol.predicates)
        )

    def accepts(self, word: LassoWord) -> bool:
        """Lasso acceptance: some run visits a final state infinitely often.

        Runs are explored in the product of the automaton with the lasso graph; the
        word is accepted iff a reachable cycle of the product passes a final state.
        """
        graph = nx.DiGraph()
        frontier = [(q, 0) for q in sorted(self.initial, key=state_key)]
        graph.add_nodes_from(frontier)
        seen = set(frontier)
        while frontier:
            node = frontier.pop()
            state, position = node
            symbol = word.symbol_at(position)
            nxt = word.successor(position)
            for target in self.step([state], symbol):
                succ = (target, nxt)
                graph.add_edge(node, succ)
                if succ not in seen:
                    seen.add(succ)
                    frontier.append(succ)
        for component in nx.strongly_connected_components(graph):
            if not any(state in self.final for state, _ in component):
                continue
            if len(component) > 1:
                return True
            node = next(iter(component))
            if graph.has_edge(node, node):
                return True
        return False

    def __len__(self) -> int:
        return len(self.states)
