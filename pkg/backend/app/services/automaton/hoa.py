"""Import of automata in the HOA v1 text format.

Only state-based Buchi acceptance (`Acceptance: 1 Inf(0)`) and the trivial
`Acceptance: 0 t` are accepted, and every edge needs an explicit `[label]`.
Each body item (state header or edge) is expected on its own line.
"""
import logging
import re
from typing import Dict, List, Mapping, Optional, Tuple

import pyparsing as pp

from ...exceptions import HoaFormatError, UnmappedAtomError, UnsupportedAcceptanceError
from ...models import AtomicPredicate, Formula
from ...models import formula as fm
from .nba import Nba

logger = logging.getLogger(__name__)

_STATE_LINE = re.compile(r'^State:\s*(\[.*\])?\s*(\d+)\s*(?:"[^"]*")?\s*(\{[\d\s]*\})?\s*$')
_EDGE_LINE = re.compile(r'^(\[.*\])?\s*(\d+)\s*(\{[\d\s]*\})?\s*$')
_BUCHI = re.compile(r"^1\s+Inf\(\s*0\s*\)$")
_ALL_ACCEPTING = re.compile(r"^0\s+t$")

_HEADER_VALUE = pp.OneOrMore(pp.QuotedString('"') | pp.Regex(r'[^\s"]+'))


def _label_grammar() -> pp.ParserElement:
    const = pp.Keyword("t").set_parse_action(lambda: fm.TRUE) | pp.Keyword("f").set_parse_action(lambda: fm.FALSE)
    index = pp.Word(pp.nums).set_parse_action(lambda toks: int(toks[0]))
    return pp.infix_notation(
        const | index,
        [
            (pp.Literal("!"), 1, pp.OpAssoc.RIGHT, lambda toks: ("!", toks[0][1])),
            (pp.Literal("&"), 2, pp.OpAssoc.LEFT, lambda toks: ("&", list(toks[0][::2]))),
            (pp.Literal("|"), 2, pp.OpAssoc.LEFT, lambda toks: ("|", list(toks[0][::2]))),
        ],
    )


_LABEL = _label_grammar()


def load_atom_map(text: str) -> Dict[str, AtomicPredicate]:
    """Parse `name = pi_<robot>_<region>` lines; `#` starts a comment.

    Raises:
        HoaFormatError: On a malformed line.
    """
    mapping = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, target = (part.strip() for part in line.partition("="))
        if not sep or not name:
            raise HoaFormatError(f"atom map line {number}: expected 'name = pi_<robot>_<region>'")
        try:
            mapping[name] = AtomicPredicate.from_name(target)
        except ValueError as e:
            raise HoaFormatError(f"atom map line {number}: {e}") from e
    return mapping


class HoaImporter:
    """Reads one HOA automaton, resolving atomic propositions through a mapping."""

    def __init__(self, atom_map: Optional[Mapping[str, AtomicPredicate]] = None):
        self.atom_map = dict(atom_map or {})

    def _resolve(self, name: str) -> AtomicPredicate:
        if name in self.atom_map:
            return self.atom_map[name]
        try:
            return AtomicPredicate.from_name(name)
        except ValueError:
            raise UnmappedAtomError(f"atomic proposition '{name}' has no predicate mapping") from None

    def _header(self, lines: List[str]) -> Dict[str, List[List[str]]]:
        header: Dict[str, List[List[str]]] = {}
        for line in lines:
            line = line.strip()
            if not line:
                continue
            key, sep, value = line.partition(":")
            if not sep:
                raise HoaFormatError(f"malformed header line '{line}'")
            try:
                tokens = list(_HEADER_VALUE.parse_string(value, parse_all=True)) if value.strip() else []
            except pp.ParseBaseException as e:
                raise HoaFormatError(f"malformed header value in '{line}': {e.msg}") from e
            header.setdefault(key.strip(), []).append(tokens)
        if header.get("HOA") != [["v1"]]:
            raise HoaFormatError("expected 'HOA: v1' header")
        return header

    def _acceptance(self, header: Dict[str, List[List[str]]]) -> bool:
        """True when every state is accepting."""
        values = header.get("Acceptance")
        if not values:
            raise HoaFormatError("missing Acceptance header")
        condition = " ".join(values[0])
        if _ALL_ACCEPTING.match(condition):
            return True
        if _BUCHI.match(condition):
            return False
        raise UnsupportedAcceptanceError(f"unsupported acceptance '{condition}'; only state-based Buchi is handled")

    def _guard(self, label: str, aps: List[AtomicPredicate]) -> Formula:
        try:
            tree = _LABEL.parse_string(label, parse_all=True)[0]
        except pp.ParseBaseException as e:
            raise HoaFormatError(f"malformed label [{label}]: {e.msg}") from e
        return self._build(tree, aps)

    def _build(self, node, aps: List[AtomicPredicate]) -> Formula:
        if isinstance(node, Formula):
            return node
        if isinstance(node, int):
            if node >= len(aps):
                raise HoaFormatError(f"label uses undeclared proposition {node}")
            return fm.atom(aps[node])
        op, operand = node
        if op == "!":
            return fm.neg(self._build(operand, aps))
        parts = [self._build(p, aps) for p in operand]
        return fm.conj_all(parts) if op == "&" else fm.disj_all(parts)

    def parse(self, text: str) -> Nba:
        """Build an automaton from HOA text.

        Raises:
            UnsupportedAcceptanceError: For anything but state-based Buchi acceptance.
            UnmappedAtomError: If a proposition has no predicate.
            HoaFormatError: On any other format problem.
        """
        if "--BODY--" not in text or "--END--" not in text:
            raise HoaFormatError("missing --BODY-- or --END-- marker")
        head, _, rest = text.partition("--BODY--")
        body, _, _ = rest.partition("--END--")
        header = self._header(head.splitlines())
        all_accepting = self._acceptance(header)

        ap_values = header.get("AP", [["0"]])[0]
        aps = [self._resolve(name) for name in ap_values[1:]]
        if int(ap_values[0]) != len(aps):
            raise HoaFormatError(f"AP header declares {ap_values[0]} propositions but names {len(aps)}")

        initial = []
        for tokens in header.get("Start", []):
            if len(tokens) != 1 or not tokens[0].isdigit():
                raise HoaFormatError("only single-state Start lines are supported")
            initial.append(f"q{tokens[0]}")

        states: List[str] = []
        final: List[str] = []
        edges: List[Tuple[str, Formula, str]] = []
        current = None
        for raw in body.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("State:"):
                match = _STATE_LINE.match(line)
                if not match:
                    raise HoaFormatError(f"malformed state line '{line}'")
                if match.group(1):
                    raise HoaFormatError("state labels are not supported")
                current = f"q{match.group(2)}"
                states.append(current)
                marks = (match.group(3) or "{}").strip("{}").split()
                if all_accepting or "0" in marks:
                    final.append(current)
                continue
            match = _EDGE_LINE.match(line)
            if not match or current is None:
                raise HoaFormatError(f"malformed edge line '{line}'")
            if match.group(3) and match.group(3).strip("{} "):
                raise UnsupportedAcceptanceError("unsupported acceptance: transition-based marks")
            if not match.group(1):
                raise HoaFormatError("implicit edge labels are not supported")
            guard = self._guard(match.group(1)[1:-1], aps)
            edges.append((current, guard, f"q{match.group(2)}"))

        declared = header.get("States")
        if declared and int(declared[0][0]) != len(states):
            raise HoaFormatError(f"States header says {declared[0][0]} but the body has {len(states)}")
        try:
            nba = Nba.from_edges(states, initial, final, edges)
        except ValueError as e:
            raise HoaFormatError(str(e)) from e
        logger.info(f"Imported HOA automaton with {len(nba.states)} states and {len(nba.transitions)} transitions")
        return nba


def import_hoa(text: str, atom_map: Optional[Mapping[str, AtomicPredicate]] = None) -> Nba:
    """Parse HOA text into an automaton; `pi_` proposition names need no mapping."""
    return HoaImporter(atom_map).parse(text)
