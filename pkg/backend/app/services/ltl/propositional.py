"""Clause and cube normal forms of propositional guards."""
from itertools import product
from typing import FrozenSet, Iterable, List, Tuple

from ...exceptions import SymbolBudgetError, TemporalGuardError
from ...models import AtomicPredicate, Formula, Op
from ...models import formula as fm
from .normal_form import to_nnf

# (predicate, polarity); polarity False means negated.
Literal = Tuple[AtomicPredicate, bool]
Clause = FrozenSet[Literal]
Cube = FrozenSet[Literal]

DEFAULT_TERM_LIMIT = 4096


def literal_key(lit: Literal) -> Tuple[AtomicPredicate, bool]:
    """Order literals by predicate, positive before negative."""
    return lit[0], not lit[1]


def term_key(term: FrozenSet[Literal]) -> Tuple[Tuple[AtomicPredicate, bool], ...]:
    return tuple(sorted(literal_key(lit) for lit in term))


def literal_formula(lit: Literal) -> Formula:
    pred, positive = lit
    return fm.atom(pred) if positive else fm.neg(fm.atom(pred))


def is_consistent(cube: Cube) -> bool:
    """False iff the cube holds a predicate and its negation."""
    return not any((pred, not positive) in cube for pred, positive in cube)


def is_tautology(clause: Clause) -> bool:
    return not is_consistent(clause)


def minimal_terms(terms: Iterable[FrozenSet[Literal]]) -> List[FrozenSet[Literal]]:
    """Drop every term that is a strict superset of another, then sort."""
    unique = sorted(set(terms), key=lambda t: (len(t), term_key(t)))
    kept: List[FrozenSet[Literal]] = []
    for term in unique:
        if not any(other <= term for other in kept):
            kept.append(term)
    return sorted(kept, key=term_key)


def _require_propositional(f: Formula) -> None:
    if not f.is_propositional:
        raise TemporalGuardError(f"guard {f} contains temporal operators")


def _distribute(left, right, limit: int, keep) -> List[FrozenSet[Literal]]:
    if len(left) * len(right) > limit * 4:
        raise SymbolBudgetError(f"normal form would exceed {limit} terms")
    merged = [a | b for a, b in product(left, right)]
    result = minimal_terms(t for t in merged if keep(t))
    if len(result) > limit:
        raise SymbolBudgetError(f"normal form has {len(result)} terms, limit is {limit}")
    return result


def _clauses(f: Formula, limit: int) -> List[Clause]:
    op = f.op
    if op == Op.TRUE:
        return []
    if f.is_false:
        return [frozenset()]
    if op == Op.ATOM:
        return [frozenset({(f.atom, True)})]
    if op == Op.NOT:
        return [frozenset({(f.args[0].atom, False)})]
    left = _clauses(f.left, limit)
    right = _clauses(f.right, limit)
    if op == Op.AND:
        return minimal_terms(left + right)
    return _distribute(left, right, limit, lambda c: not is_tautology(c))


def _cubes(f: Formula, limit: int) -> List[Cube]:
    op = f.op
    if op == Op.TRUE:
        return [frozenset()]
    if f.is_false:
        return []
    if op == Op.ATOM:
        return [frozenset({(f.atom, True)})]
    if op == Op.NOT:
        return [frozenset({(f.args[0].atom, False)})]
    left = _cubes(f.left, limit)
    right = _cubes(f.right, limit)
    if op == Op.OR:
        return minimal_terms(left + right)
    return _distribute(left, right, limit, is_consistent)


def to_cnf(b: Formula, limit: int = DEFAULT_TERM_LIMIT) -> List[Clause]:
    """Conjunctive normal form by distribution, without auxiliary variables.

    Tautological and subsumed clauses are dropped and clauses come out sorted, so the
    result is deterministic. An empty list means true; a list holding the empty clause
    means false.

    Raises:
        TemporalGuardError: If b has temporal operators.
        SymbolBudgetError: If the clause count exceeds `limit`.
    """
    _require_propositional(b)
    return _clauses(to_nnf(b), limit)


def to_dnf(b: Formula, limit: int = DEFAULT_TERM_LIMIT) -> List[Cube]:
    """Disjunctive normal form; contradictory and subsumed cubes are dropped."""
    _require_propositional(b)
    return _cubes(to_nnf(b), limit)


def conjoin_dnf(left: List[Cube], right: List[Cube], keep=is_consistent,
                limit: int = DEFAULT_TERM_LIMIT) -> List[Cube]:
    """DNF of the conjunction of two DNFs, keeping only cubes accepted by `keep`."""
    return _distribute(left, right, limit, keep)


def clause_formula(clause: Clause) -> Formula:
    return fm.disj_all(literal_formula(lit) for lit in sorted(clause, key=literal_key))


def cube_formula(cube: Cube) -> Formula:
    return fm.conj_all(literal_formula(lit) for lit in sorted(cube, key=literal_key))


def from_cnf(clauses: List[Clause]) -> Formula:
    return fm.conj_all(clause_formula(c) for c in clauses)


def from_dnf(cubes: List[Cube]) -> Formula:
    return fm.disj_all(cube_formula(c) for c in cubes)


def format_clause(clause: Clause) -> str:
    """Render a clause as `(a | !b)`."""
    parts = [pred.name if positive else f"!{pred.name}" for pred, positive in sorted(clause, key=literal_key)]
    return "(" + " | ".join(parts) + ")"
