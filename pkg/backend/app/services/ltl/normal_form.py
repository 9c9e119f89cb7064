"""Negation normal form."""
from ...models import Formula, Op
from ...models import formula as fm


def to_nnf(f: Formula) -> Formula:
    """Push negations down to atoms and expand derived operators.

    The result only uses true, false, literals, and, or, until and always.
    F a becomes (true U a); a -> b becomes (!a | b); the negation of an until
    uses the release-free encoding !(a U b) = G !b | (!b U (!a & !b)).
    """
    op = f.op
    if op in (Op.TRUE, Op.ATOM):
        return f
    if op == Op.NOT:
        return _negate(f.args[0])
    if op == Op.AND:
        return fm.conj(to_nnf(f.left), to_nnf(f.right))
    if op == Op.OR:
        return fm.disj(to_nnf(f.left), to_nnf(f.right))
    if op == Op.IMPLIES:
        return fm.disj(_negate(f.left), to_nnf(f.right))
    if op == Op.UNTIL:
        return fm.until(to_nnf(f.left), to_nnf(f.right))
    if op == Op.EVENTUALLY:
        return fm.until(fm.TRUE, to_nnf(f.args[0]))
    return fm.always(to_nnf(f.args[0]))


def _negate(f: Formula) -> Formula:
    """NNF of !f."""
    op = f.op
    if op in (Op.TRUE, Op.ATOM):
        return fm.neg(f)
    if op == Op.NOT:
        return to_nnf(f.args[0])
    if op == Op.AND:
        return fm.disj(_negate(f.left), _negate(f.right))
    if op == Op.OR:
        return fm.conj(_negate(f.left), _negate(f.right))
    if op == Op.IMPLIES:
        return fm.conj(to_nnf(f.left), _negate(f.right))
    if op == Op.EVENTUALLY:
        return fm.always(_negate(f.args[0]))
    if op == Op.ALWAYS:
        return fm.until(fm.TRUE, _negate(f.args[0]))
    not_left = _negate(f.left)
    not_right = _negate(f.right)
    return fm.disj(fm.always(not_right), fm.until(not_right, fm.conj(not_left, not_right)))


def is_nnf(f: Formula) -> bool:
    """True iff negations only guard atoms or true and no derived operator remains."""
    if f.op == Op.NOT:
        return f.args[0].op in (Op.ATOM, Op.TRUE)
    if f.op in (Op.EVENTUALLY, Op.IMPLIES):
        return False
    return all(is_nnf(a) for a in f.args)
