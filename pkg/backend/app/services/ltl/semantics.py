"""Direct LTL semantics on lasso words, used as the reference oracle."""
from typing import Dict, List

from ...models import Formula, LassoWord, Op


class LassoEvaluator:
    """Evaluates formulas at every position of one lasso word.

    The lasso graph has one node per prefix/cycle position; the last cycle
    position loops back to the first one. Until is the least fixpoint and always
    the greatest fixpoint of its one-step unfolding over that graph, so both are
    decided after at most one pass per position.
    """

    def __init__(self, word: LassoWord):
        self.word = word
        self.size = len(word)
        self._succ = [word.successor(i) for i in range(self.size)]
        self._cache: Dict[Formula, List[bool]] = {}

    def holds(self, f: Formula, position: int = 0) -> bool:
        return self.table(f)[position]

    def table(self, f: Formula) -> List[bool]:
        cached = self._cache.get(f)
        if cached is None:
            cached = self._compute(f)
            self._cache[f] = cached
        return cached

    def _compute(self, f: Formula) -> List[bool]:
        n = self.size
        op = f.op
        if op == Op.TRUE:
            return [True] * n
        if op == Op.ATOM:
            return [f.atom in self.word.symbol_at(i) for i in range(n)]
        if op == Op.NOT:
            return [not v for v in self.table(f.args[0])]
        if op in (Op.AND, Op.OR, Op.IMPLIES):
            left, right = self.table(f.left), self.table(f.right)
            if op == Op.AND:
                return [a and b for a, b in zip(left, right)]
            if op == Op.OR:
                return [a or b for a, b in zip(left, right)]
            return [(not a) or b for a, b in zip(left, right)]
        if op == Op.EVENTUALLY:
            return self._least([True] * n, self.table(f.args[0]))
        if op == Op.UNTIL:
            return self._least(self.table(f.left), self.table(f.right))
        return self._greatest(self.table(f.args[0]))

    def _least(self, hold: List[bool], goal: List[bool]) -> List[bool]:
        value = list(goal)
        changed = True
        while changed:
            changed = False
            for i in reversed(range(self.size)):
                if not value[i] and hold[i] and value[self._succ[i]]:
                    value[i] = True
                    changed = True
        return value

    def _greatest(self, hold: List[bool]) -> List[bool]:
        value = list(hold)
        changed = True
        while changed:
            changed = False
            for i in reversed(range(self.size)):
                if value[i] and not value[self._succ[i]]:
                    value[i] = False
                    changed = True
        return value


def eval_lasso(f: Formula, word: LassoWord) -> bool:
    """Whether prefix . cycle^omega satisfies f."""
    return LassoEvaluator(word).holds(f, 0)
