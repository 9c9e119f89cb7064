"""LTL parsing, normal forms and lasso semantics."""
from .normal_form import is_nnf, to_nnf
from .parser import LtlParser, parse_ltl
from .propositional import (
    Clause,
    Cube,
    Literal,
    conjoin_dnf,
    minimal_terms,
    cube_formula,
    format_clause,
    from_cnf,
    from_dnf,
    to_cnf,
    to_dnf,
)
from .semantics import LassoEvaluator, eval_lasso
from .templates import VisitTask, delivery_formula, surveillance_formula, visit

__all__ = [
    'LtlParser', 'parse_ltl', 'to_nnf', 'is_nnf', 'eval_lasso', 'LassoEvaluator',
    'Literal', 'Clause', 'Cube', 'to_cnf', 'to_dnf', 'conjoin_dnf', 'from_cnf', 'from_dnf',
    'cube_formula', 'format_clause', 'minimal_terms', 'VisitTask', 'visit', 'surveillance_formula',
    'delivery_formula',
]
