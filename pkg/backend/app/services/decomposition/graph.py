"""Decomposition of a pruned automaton into transitions that robots can enable by
independent reach-and-avoid tasks, and the hop distance to accepting edges."""
import logging
from collections import deque
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ...exceptions import SymbolBudgetError
from ...models import AtomicPredicate, Formula, Op, Symbol
from ...models import formula as fm
from ..automaton.nba import Nba, state_key
from ..automaton.symbols import (
    DEFAULT_ATOM_LIMIT,
    DEFAULT_PRODUCT_LIMIT,
    cube_is_feasible,
    enumerate_feasible_symbols,
)
from ..ltl.normal_form import to_nnf
from ..ltl.propositional import Cube, conjoin_dnf, cube_formula, to_dnf
from .types import AUX, DecompGraph, FreeGoal, Goal, GraphEdge, RegionGoal, RunCandidate, SymbolAssignment

logger = logging.getLogger(__name__)

DEFAULT_HOP_CAP = 6
ARRIVAL_SUBSET_LIMIT = 10


def add_aux_state(a: Nba, initial_symbol: Symbol) -> Nba:
    """Add the auxiliary start state.

    It carries a true self-loop and one edge to every initial state, guarded by the
    exact description of the initial label over the automaton's predicates.
    """
    if AUX in a.states:
        raise ValueError(f"automaton already has a state named {AUX}")
    label = cube_formula(frozenset((p, p in initial_symbol) for p in a.atoms))
    edges = [(t.source, t.guard, t.target) for t in a.transitions]
    edges.append((AUX, fm.TRUE, AUX))
    edges.extend((AUX, label, q) for q in sorted(a.initial, key=state_key))
    return Nba.from_edges(a.states + (AUX,), [AUX], a.final, edges)


def build_guard(a: Nba, run: RunCandidate) -> Formula:
    """Conjunction of the hop guards along the run and the terminal self-loop guard."""
    parts = [a.guard(s, t) for s, t in zip(run.path, run.path[1:])]
    parts.append(a.self_loop(run.target))
    if any(p is None for p in parts):
        raise ValueError(f"run {run} does not follow the automaton")
    return fm.conj_all(parts)


def _loop_always_enabled(loop: Optional[Formula]) -> bool:
    return loop is not None and frozenset() in to_dnf(loop)


class RunEnumerator:
    """Simple paths from a state whose hop guards can hold together under one feasible symbol."""

    def __init__(self, a: Nba, hop_cap: int = DEFAULT_HOP_CAP):
        self.a = a
        self.hop_cap = hop_cap
        self.truncated = 0
        self._dnf: Dict[Formula, List[Cube]] = {}

    def _cubes(self, guard: Formula) -> List[Cube]:
        if guard not in self._dnf:
            self._dnf[guard] = to_dnf(guard)
        return self._dnf[guard]

    def _conjoin(self, cubes: List[Cube], guard: Formula) -> List[Cube]:
        return conjoin_dnf(cubes, self._cubes(guard), keep=cube_is_feasible)

    def _can_stay(self, cubes: List[Cube], state: str) -> bool:
        loop = self.a.self_loop(state)
        return loop is not None and bool(self._conjoin(cubes, loop))

    def runs_from(self, q: str) -> List[RunCandidate]:
        runs = []
        start = [frozenset()]
        if self._can_stay(start, q):
            runs.append(RunCandidate((q,)))
        stack = [((q,), start)]
        while stack:
            path, cubes = stack.pop()
            last = path[-1]
            if len(path) > 1 and _loop_always_enabled(self.a.self_loop(last)):
                continue
            successors = [(t, g) for t, g in self.a.successors(last) if t != last and t not in path[1:]]
            if len(path) - 1 >= self.hop_cap:
                if successors:
                    self.truncated += 1
                    logger.debug(f"Run enumeration from {q} truncated at {self.hop_cap} hops along {' '.join(path)}")
                continue
            for target, guard in reversed(successors):
                extended = self._conjoin(cubes, guard)
                if not extended:
                    continue
                new_path = path + (target,)
                if self._can_stay(extended, target):
                    runs.append(RunCandidate(new_path))
                if target != q:
                    stack.append((new_path, extended))
        return sorted(runs, key=lambda r: [state_key(s) for s in r.path])


def enumerate_runs(a: Nba, q: str, hop_cap: int = DEFAULT_HOP_CAP) -> List[RunCandidate]:
    """Candidate runs from q: simple paths ending in a state whose self-loop can hold."""
    return RunEnumerator(a, hop_cap).runs_from(q)


def _negated_atoms(f: Formula) -> FrozenSet[AtomicPredicate]:
    nnf = to_nnf(f)
    found = set()
    stack = [nnf]
    while stack:
        node = stack.pop()
        if node.op == Op.NOT and node.args[0].op == Op.ATOM:
            found.add(node.args[0].atom)
        else:
            stack.extend(node.args)
    return frozenset(found)


def target_assignment(guard: Formula, symbol: Symbol) -> SymbolAssignment:
    """Robots and goals needed to produce `symbol` for `guard`."""
    constrained = frozenset(p.robot for p in guard.atoms)
    involved = symbol.robots
    goals: List[Tuple[int, Goal]] = []
    for robot in sorted(constrained):
        region = symbol.region_of(robot)
        if region is not None:
            goals.append((robot, RegionGoal(region)))
        else:
            named = frozenset(p.target for p in guard.atoms if p.robot == robot and not p.is_obstacle)
            goals.append((robot, FreeGoal(named)))
    return SymbolAssignment(symbol=symbol, involved=involved, constrained=constrained, goals=tuple(goals))


def _arrivals_keep_loop(loop: Formula, loop_atoms: FrozenSet[AtomicPredicate], sustaining: Symbol,
                        target: SymbolAssignment) -> bool:
    """Whether every partial arrival of the moving robots keeps the sustained self-loop true."""
    arriving = sorted(
        p for p in target.symbol.predicates
        if p in loop_atoms and p.robot not in sustaining.robots
    )
    if not arriving or not (set(arriving) & _negated_atoms(loop)):
        return True
    if len(arriving) > ARRIVAL_SUBSET_LIMIT:
        return False
    # Free-goal robots may still be travelling after every region robot arrived.
    free_movers = target.constrained - target.involved
    largest = len(arriving) if free_movers else len(arriving) - 1
    for size in range(1, largest + 1):
        for subset in combinations(arriving, size):
            if not loop.evaluate(sustaining.predicates | frozenset(subset)):
                return False
    return True


def check_decomposable(guard: Formula, symbols: Sequence[Symbol], selfloop_symbols: Sequence[Symbol],
                       loop: Formula, loop_atoms: FrozenSet[AtomicPredicate]
                       ) -> Optional[Tuple[SymbolAssignment, ...]]:
    """Decomposable target symbols of a run, or None when the run is not decomposable.

    A target symbol is admissible for a self-loop symbol when every robot that holds
    a region in the self-loop symbol and is constrained by the guard already meets its
    target goal there, and partial arrivals of the other robots keep the self-loop
    enabled. The run is decomposable iff every self-loop symbol has an admissible
    target; each returned assignment records the self-loop symbols it serves.
    """
    if not selfloop_symbols or not symbols:
        return None
    candidates = [target_assignment(guard, s) for s in symbols]
    admitted: Dict[int, set] = {i: set() for i in range(len(candidates))}
    for sustaining in selfloop_symbols:
        found = False
        for i, target in enumerate(candidates):
            staying = sustaining.robots & target.constrained
            if not all(target.goal(j).satisfied_by(sustaining.region_of(j)) for j in staying):
                continue
            if not _arrivals_keep_loop(loop, loop_atoms, sustaining, target):
                continue
            admitted[i].add(sustaining)
            found = True
        if not found:
            logger.debug(f"No admissible target symbol of {guard} for self-loop symbol {sustaining}")
            return None
    return tuple(
        SymbolAssignment(c.symbol, c.involved, c.constrained, c.goals, frozenset(admitted[i]))
        for i, c in enumerate(candidates) if admitted[i]
    )


def distances(nodes: Iterable[str], edges: Iterable[GraphEdge]
              ) -> Tuple[FrozenSet[str], Dict[str, Optional[int]]]:
    """Accepting nodes and the hop distance of every node to them (None when unreachable)."""
    nodes = list(nodes)
    edges = list(edges)
    vf = frozenset(e.source for e in edges if e.accepting)
    reverse = nx.DiGraph()
    reverse.add_nodes_from(nodes)
    reverse.add_edges_from((e.target, e.source) for e in edges)
    lengths = nx.multi_source_dijkstra_path_length(reverse, set(vf)) if vf else {}
    return vf, {q: lengths.get(q) for q in nodes}


class DecompositionBuilder:
    """Explores decomposable transitions breadth-first from the auxiliary state."""

    def __init__(self, a: Nba, initial_symbol: Symbol, hop_cap: int = DEFAULT_HOP_CAP,
                 atom_limit: int = DEFAULT_ATOM_LIMIT, product_limit: int = DEFAULT_PRODUCT_LIMIT):
        if AUX not in a.states:
            raise ValueError("automaton has no auxiliary state; call add_aux_state first")
        self.a = a
        self.atoms = a.atoms
        self.initial_symbol = initial_symbol.restrict(self.atoms)
        self.atom_limit = atom_limit
        self.product_limit = product_limit
        self.runs = RunEnumerator(a, hop_cap)

    def loop_guard(self, q: str) -> Formula:
        return fm.TRUE if q == AUX else self.a.self_loop(q)

    def loop_atoms(self, q: str) -> FrozenSet[AtomicPredicate]:
        return self.atoms if q == AUX else self.a.self_loop(q).atoms

    def selfloop_symbols(self, q: str) -> Tuple[Symbol, ...]:
        if q == AUX:
            return (self.initial_symbol,)
        return enumerate_feasible_symbols(self.a.self_loop(q), self.atom_limit, self.product_limit).symbols

    def run_symbols(self, run: RunCandidate, guard: Formula) -> List[Symbol]:
        """Feasible symbols of the guard that do not keep the run in an intermediate state."""
        symbols = enumerate_feasible_symbols(guard, self.atom_limit, self.product_limit)
        loops = [self.a.self_loop(s) for s in run.intermediates]
        return [
            s for s in symbols
            if not any(loop is not None and loop.evaluate(s.predicates) for loop in loops)
        ]

    def is_accepting(self, run: RunCandidate) -> bool:
        return any(s in self.a.final for s in run.path)

    def edge_for(self, run: RunCandidate, selfloop: Tuple[Symbol, ...]) -> Optional[GraphEdge]:
        guard = build_guard(self.a, run)
        q = run.source
        assignments = check_decomposable(
            guard, self.run_symbols(run, guard), selfloop, self.loop_guard(q), self.loop_atoms(q)
        )
        if assignments is None:
            return None
        return GraphEdge(
            source=q, target=run.target, run=run, guard=guard,
            assignments=assignments, accepting=self.is_accepting(run),
        )

    def build(self) -> DecompGraph:
        nodes = [AUX]
        edges: List[GraphEdge] = []
        queue = deque([AUX])
        while queue:
            q = queue.popleft()
            selfloop = self.selfloop_symbols(q)
            by_target: Dict[str, List[RunCandidate]] = {}
            for run in self.runs.runs_from(q):
                by_target.setdefault(run.target, []).append(run)
            for target in sorted(by_target, key=state_key):
                ranked = sorted(
                    by_target[target],
                    key=lambda r: (not self.is_accepting(r), r.hops, [state_key(s) for s in r.path]),
                )
                for run in ranked:
                    edge = self.edge_for(run, selfloop)
                    if edge is None:
                        continue
                    edges.append(edge)
                    if target not in nodes:
                        nodes.append(target)
                        queue.append(target)
                    break
        nodes = sorted(nodes, key=state_key)
        edges.sort(key=lambda e: (state_key(e.source), state_key(e.target)))
        vf, dist = distances(nodes, edges)
        return DecompGraph(
            nodes=tuple(nodes), edges=tuple(edges), vf=vf, dist=dist,
            loop_guards={q: self.loop_guard(q) for q in nodes},
            loop_atoms={q: self.loop_atoms(q) for q in nodes},
            truncated_runs=self.runs.truncated,
        )


def build_graph(a: Nba, initial_symbol: Symbol, hop_cap: int = DEFAULT_HOP_CAP,
                atom_limit: int = DEFAULT_ATOM_LIMIT, product_limit: int = DEFAULT_PRODUCT_LIMIT) -> DecompGraph:
    """Graph of decomposable transitions reachable from the auxiliary state.

    `a` must be pruned and carry the auxiliary state; `initial_symbol` is the label of
    the initial robot configuration, the only symbol produced while in that state.

    Raises:
        SymbolBudgetError: If a guard exceeds the symbol enumeration limits.
    """
    try:
        g = DecompositionBuilder(a, initial_symbol, hop_cap, atom_limit, product_limit).build()
    except SymbolBudgetError as e:
        logger.error(f"Symbol enumeration budget exceeded while building the graph: {e}")
        raise
    logger.info(
        f"Decomposition graph has {len(g.nodes)} nodes, {len(g.edges)} edges, "
        f"accepting nodes {sorted(g.vf, key=state_key)}, distance from {AUX} {g.dist.get(AUX)}"
    )
    if g.truncated_runs:
        logger.warning(f"{g.truncated_runs} run(s) were cut at the hop cap of {hop_cap}")
    return g


def reachable_set(a: Nba, initial_symbol: Symbol, hop_cap: int = DEFAULT_HOP_CAP) -> FrozenSet[str]:
    """States reachable from the auxiliary state through decomposable runs, aux included."""
    return frozenset(DecompositionBuilder(a, initial_symbol, hop_cap).build().nodes)


def without_edges(g: DecompGraph, removed: Iterable[Tuple[str, str]]) -> DecompGraph:
    """Copy of g without the given edges; accepting nodes and distances are recomputed."""
    removed = set(removed)
    edges = tuple(e for e in g.edges if e.key not in removed)
    vf, dist = distances(g.nodes, edges)
    return DecompGraph(
        nodes=g.nodes, edges=edges, vf=vf, dist=dist, loop_guards=g.loop_guards,
        loop_atoms=g.loop_atoms, initial=g.initial, truncated_runs=g.truncated_runs,
    )


def has_accepting_cycle(g: DecompGraph) -> bool:
    """Whether a cycle through an accepting edge is reachable from the initial node."""
    graph = nx.DiGraph()
    graph.add_nodes_from(g.nodes)
    graph.add_edges_from(e.key for e in g.edges)
    reachable = nx.descendants(graph, g.initial) | {g.initial}
    for e in g.accepting_edges:
        if e.source in reachable and (e.source == e.target or nx.has_path(graph, e.target, e.source)):
            return True
    return False
