"""LTL formula parser.

Concrete syntax: `&`, `|`, `!`, `->`, `U`, `F`, `G`, parentheses, `true`/`false` and
predicates `pi_<robot>_<region>` / `pi_<robot>_O`. Precedence, tightest first:
unary operators, `U` (right-associative), `&`, `|`, `->` (right-associative).
"""
import logging
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Union

import pyparsing as pp

from ...exceptions import LtlSyntaxError, NextOperatorError, UnknownPredicateError
from ...models import OBSTACLE, AtomicPredicate, Formula
from ...models import formula as fm

logger = logging.getLogger(__name__)

pp.ParserElement.enable_packrat()

_NEXT_PATTERN = re.compile(r"\bX\b")


@dataclass(frozen=True)
class _Leaf:
    name: str
    position: int


@dataclass(frozen=True)
class _Unary:
    op: str
    child: "_Node"


@dataclass(frozen=True)
class _Binary:
    op: str
    left: "_Node"
    right: "_Node"


_Node = Union[_Leaf, _Unary, _Binary, Formula]

_UNARY = {"!": fm.neg, "F": fm.eventually, "G": fm.always}
_BINARY = {"&": fm.conj, "|": fm.disj, "U": fm.until, "->": fm.implies}


def _unary_action(tokens):
    op, child = tokens[0]
    return _Unary(op, child)


def _left_action(tokens):
    items = list(tokens[0])
    node = items[0]
    for i in range(1, len(items), 2):
        node = _Binary(items[i], node, items[i + 1])
    return node


def _right_action(tokens):
    items = list(tokens[0])
    node = items[-1]
    for i in range(len(items) - 2, 0, -2):
        node = _Binary(items[i], items[i - 1], node)
    return node


def _build_grammar() -> pp.ParserElement:
    reserved = pp.MatchFirst([pp.Keyword(k) for k in ("F", "G", "U", "X", "true", "false")])
    true_kw = pp.Keyword("true").set_parse_action(lambda: fm.TRUE)
    false_kw = pp.Keyword("false").set_parse_action(lambda: fm.FALSE)
    name = pp.Regex(r"[A-Za-z_][A-Za-z0-9_]*").set_parse_action(
        lambda s, loc, toks: _Leaf(toks[0], loc)
    )
    operand = true_kw | false_kw | (~reserved + name)
    unary = pp.Literal("!") | pp.Keyword("F") | pp.Keyword("G")
    return pp.infix_notation(
        operand,
        [
            (unary, 1, pp.OpAssoc.RIGHT, _unary_action),
            (pp.Keyword("U"), 2, pp.OpAssoc.RIGHT, _right_action),
            (pp.Literal("&"), 2, pp.OpAssoc.LEFT, _left_action),
            (pp.Literal("|"), 2, pp.OpAssoc.LEFT, _left_action),
            (pp.Literal("->"), 2, pp.OpAssoc.RIGHT, _right_action),
        ],
    )


_GRAMMAR = _build_grammar()


class LtlParser:
    """Parser bound to an optional robot count and region catalogue."""

    def __init__(self, robots: Optional[int] = None, regions: Optional[Iterable[str]] = None):
        """Initialize the parser.

        Args:
            robots: Number of robots; predicates naming a larger index are rejected.
            regions: Declared region ids; other region names are rejected.
        """
        self.robots = robots
        self.regions = frozenset(regions) if regions is not None else None

    def parse(self, text: str) -> Formula:
        """Parse formula text into a syntax tree.

        Raises:
            NextOperatorError: If the text uses the next operator.
            UnknownPredicateError: If a name is not a declared predicate.
            LtlSyntaxError: On any other syntax error.
        """
        found = _NEXT_PATTERN.search(text)
        if found:
            raise NextOperatorError("the next operator X is not supported", position=found.start())
        if not text.strip():
            raise LtlSyntaxError("empty formula", position=0)
        try:
            result = _GRAMMAR.parse_string(text, parse_all=True)
        except pp.ParseBaseException as e:
            raise LtlSyntaxError(f"syntax error: {e.msg}", position=e.loc) from e
        return self._convert(result[0])

    def _convert(self, node: _Node) -> Formula:
        if isinstance(node, Formula):
            return node
        if isinstance(node, _Leaf):
            return fm.atom(self._predicate(node))
        if isinstance(node, _Unary):
            return _UNARY[node.op](self._convert(node.child))
        return _BINARY[node.op](self._convert(node.left), self._convert(node.right))

    def _predicate(self, leaf: _Leaf) -> AtomicPredicate:
        try:
            pred = AtomicPredicate.from_name(leaf.name)
        except ValueError as e:
            raise UnknownPredicateError(f"unknown predicate '{leaf.name}'", position=leaf.position) from e
        if self.robots is not None and pred.robot > self.robots:
            raise UnknownPredicateError(
                f"predicate '{leaf.name}' names robot {pred.robot} but only {self.robots} are declared",
                position=leaf.position,
            )
        if self.regions is not None and pred.target != OBSTACLE and pred.target not in self.regions:
            raise UnknownPredicateError(
                f"predicate '{leaf.name}' names undeclared region '{pred.target}'",
                position=leaf.position,
            )
        return pred


def parse_ltl(text: str, robots: Optional[int] = None, regions: Optional[Iterable[str]] = None) -> Formula:
    """Parse formula text, optionally checking predicates against a scenario."""
    formula = LtlParser(robots=robots, regions=regions).parse(text)
    logger.debug(f"Parsed formula {formula} over {len(formula.atoms)} predicates")
    return formula
