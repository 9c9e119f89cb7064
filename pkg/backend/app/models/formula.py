"""LTL syntax tree."""
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, reduce
from typing import AbstractSet, FrozenSet, Iterable, Optional, Tuple, Union

from ..exceptions import TemporalGuardError
from .predicates import AtomicPredicate


class Op(str, Enum):
    """Node kinds of the syntax tree."""
    TRUE = "true"
    ATOM = "atom"
    NOT = "not"
    AND = "and"
    OR = "or"
    UNTIL = "until"
    ALWAYS = "always"
    EVENTUALLY = "eventually"
    IMPLIES = "implies"


BINARY_OPS = frozenset({Op.AND, Op.OR, Op.UNTIL, Op.IMPLIES})
TEMPORAL_OPS = frozenset({Op.UNTIL, Op.ALWAYS, Op.EVENTUALLY})

_INFIX = {Op.AND: "&", Op.OR: "|", Op.UNTIL: "U", Op.IMPLIES: "->"}
_PREFIX = {Op.NOT: "!", Op.ALWAYS: "G ", Op.EVENTUALLY: "F "}


@dataclass(frozen=True)
class Formula:
    """Immutable LTL formula node; structural equality."""
    op: Op
    args: Tuple["Formula", ...] = ()
    atom: Optional[AtomicPredicate] = None

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((self.op, self.args, self.atom)))

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def atoms(self) -> FrozenSet[AtomicPredicate]:
        if self.op == Op.ATOM:
            return frozenset({self.atom})
        return frozenset().union(*(a.atoms for a in self.args))

    @cached_property
    def is_propositional(self) -> bool:
        return self.op not in TEMPORAL_OPS and all(a.is_propositional for a in self.args)

    @property
    def is_false(self) -> bool:
        return self.op == Op.NOT and self.args[0].op == Op.TRUE

    @property
    def is_literal(self) -> bool:
        return self.op == Op.ATOM or (self.op == Op.NOT and self.args[0].op == Op.ATOM)

    @property
    def left(self) -> "Formula":
        return self.args[0]

    @property
    def right(self) -> "Formula":
        return self.args[1]

    def evaluate(self, holding: AbstractSet[AtomicPredicate]) -> bool:
        """Evaluate a propositional formula; atoms not in `holding` read false."""
        op = self.op
        if op == Op.TRUE:
            return True
        if op == Op.ATOM:
            return self.atom in holding
        if op == Op.NOT:
            return not self.args[0].evaluate(holding)
        if op == Op.AND:
            return self.args[0].evaluate(holding) and self.args[1].evaluate(holding)
        if op == Op.OR:
            return self.args[0].evaluate(holding) or self.args[1].evaluate(holding)
        if op == Op.IMPLIES:
            return (not self.args[0].evaluate(holding)) or self.args[1].evaluate(holding)
        raise TemporalGuardError(f"cannot evaluate temporal formula {self} on a single symbol")

    @cached_property
    def text(self) -> str:
        """Fully parenthesized concrete syntax accepted by the parser."""
        if self.op == Op.TRUE:
            return "true"
        if self.op == Op.ATOM:
            return self.atom.name
        if self.op in _PREFIX:
            return _PREFIX[self.op] + self.args[0].text
        return f"({self.args[0].text} {_INFIX[self.op]} {self.args[1].text})"

    def __str__(self) -> str:
        return self.text


TRUE = Formula(Op.TRUE)
FALSE = Formula(Op.NOT, (TRUE,))


def atom(pred: Union[AtomicPredicate, str]) -> Formula:
    if isinstance(pred, str):
        pred = AtomicPredicate.from_name(pred)
    return Formula(Op.ATOM, atom=pred)


def neg(f: Formula) -> Formula:
    return Formula(Op.NOT, (f,))


def conj(left: Formula, right: Formula) -> Formula:
    return Formula(Op.AND, (left, right))


def disj(left: Formula, right: Formula) -> Formula:
    return Formula(Op.OR, (left, right))


def implies(left: Formula, right: Formula) -> Formula:
    return Formula(Op.IMPLIES, (left, right))


def until(left: Formula, right: Formula) -> Formula:
    return Formula(Op.UNTIL, (left, right))


def always(f: Formula) -> Formula:
    return Formula(Op.ALWAYS, (f,))


def eventually(f: Formula) -> Formula:
    return Formula(Op.EVENTUALLY, (f,))


def conj_all(parts: Iterable[Formula]) -> Formula:
    """Left-folded conjunction; TRUE when empty."""
    parts = list(parts)
    if not parts:
        return TRUE
    return reduce(conj, parts)


def disj_all(parts: Iterable[Formula]) -> Formula:
    """Left-folded disjunction; FALSE when empty."""
    parts = list(parts)
    if not parts:
        return FALSE
    return reduce(disj, parts)


def flatten(f: Formula, op: Op) -> Tuple[Formula, ...]:
    """Operands of a nested chain of the same associative operator."""
    if f.op != op:
        return (f,)
    return flatten(f.args[0], op) + flatten(f.args[1], op)
