"""
Cross-validation of the translated automata against direct formula evaluation.
"""

import logging
import time

import numpy as np
import pytest
from hypothesis import given, settings

from app.models import AtomicPredicate, LassoWord, Symbol
from app.services.decomposition import AUX
from app.services.automaton import prune, translate
from app.services.ltl import delivery_formula, parse_ltl, surveillance_formula, visit
from app.services.simulation import cross_validate, lasso_words, random_symbol

from conftest import compile_formula
from strategies import formulas

logger = logging.getLogger(__name__)

CORPUS = [
    "true",
    "false",
    "pi_1_a",
    "!pi_1_a",
    "F pi_1_a",
    "G pi_1_a",
    "G F pi_1_a",
    "F G pi_1_a",
    "G !pi_1_a",
    "pi_1_a U pi_1_b",
    "!pi_1_a U pi_1_b",
    "pi_1_a U (pi_1_b U pi_2_a)",
    "(pi_1_a U pi_1_b) U pi_2_a",
    "G (pi_1_a -> F pi_1_b)",
    "G (pi_1_a -> (pi_1_a U pi_2_b))",
    "F (pi_1_a & F pi_1_b)",
    "F (pi_1_a & F (pi_1_b & F pi_2_a))",
    "G F pi_1_a & G F pi_2_b",
    "G F (pi_1_a & pi_2_a)",
    "F G pi_1_a | G F pi_1_b",
    "!(G F pi_1_a)",
    "!(pi_1_a U pi_1_b)",
    "G (pi_1_a | pi_2_a)",
    "F pi_1_a & G !pi_1_O",
    "G !(pi_1_O | pi_2_O) & F (pi_1_a & pi_2_b)",
    "F ((pi_1_a | pi_2_a) & pi_1_b)",
    "(pi_1_a -> pi_2_a) U G pi_1_b",
    "G (pi_1_a -> !pi_2_a)",
    "F pi_1_a -> F pi_2_a",
    "G F pi_1_a -> G F pi_2_a",
    "(G pi_1_a) U pi_2_b",
    "F (pi_1_a U G pi_2_a)",
    "pi_1_a & !pi_1_a",
    "G (pi_1_a & !pi_1_a) | F pi_2_b",
    # building blocks of the surveillance and delivery case studies
    "G F (pi_1_l6 | pi_1_l3) & G F pi_1_l1",
    "!pi_1_l2 U (pi_1_l5 | pi_1_l4)",
    "F pi_1_l2 & F (pi_1_l5 | pi_1_l4) & (!pi_1_l2 U (pi_1_l5 | pi_1_l4))",
    "G F ((pi_1_l6 | pi_1_l3) & (pi_2_l6 | pi_2_l3)) & G F (pi_2_l2 | pi_2_l3)",
    "F ((pi_1_l8 | pi_1_l5) & F pi_1_l7) & G !pi_1_l3",
    "F (pi_1_l4 & (F (pi_1_l1 | pi_1_l2) & F pi_1_l6))",
    "F G (pi_1_exit & pi_2_exit) & G !(pi_1_O | pi_2_O)",
]

SURVEILLANCE = (
    "G F (pi_1_l6 | pi_1_l3) & G F pi_1_l1 & F pi_1_l2 & F (pi_1_l5 | pi_1_l4) & F pi_1_l8 & F pi_1_l9"
    " & (!pi_1_l2 U (pi_1_l5 | pi_1_l4)) & G !pi_1_O"
)
DELIVERY = (
    "F ((pi_1_l8 | pi_1_l5) & F (pi_1_l7 & F (pi_1_l4 & (F (pi_1_l1 | pi_1_l2) & F pi_1_l6))))"
    " & G !pi_1_l3 & G !pi_1_O & F G pi_1_exit"
)

TEMPLATES = [
    surveillance_formula([visit(["a"]), visit(["b"], team=[2])], [visit(["a", "b"], team=[1, 2])], robots=[1, 2]),
    surveillance_formula([visit(["a"])], [], robots=[1], ordering=(visit(["b"]), visit(["a"]))),
    delivery_formula([visit(["a"]), visit(["b"])], robots=[1], forbidden=visit(["c"]), exit_task=visit(["a"])),
]


@pytest.mark.parametrize("text", CORPUS + TEMPLATES)
def test_automaton_matches_formula(text):
    """The automaton accepts exactly the lasso words that satisfy the formula."""
    f = parse_ltl(text)
    automaton = translate(f)
    rng = np.random.default_rng(11)
    report = cross_validate(f, automaton, lasso_words(f.atoms, 150, rng))
    assert report.agrees, [str(w) for w in report.mismatches[:3]]
    feasible = cross_validate(f, automaton, lasso_words(f.atoms, 200, rng, feasible=True))
    assert feasible.agrees


@pytest.mark.parametrize("text", CORPUS + TEMPLATES)
def test_pruning_keeps_feasible_words(text):
    f = parse_ltl(text)
    report = cross_validate(f, prune(translate(f)), lasso_words(f.atoms, 200, np.random.default_rng(5), feasible=True))
    assert report.agrees


@settings(max_examples=60, deadline=None)
@given(formulas)
def test_random_formulas(f):
    report = cross_validate(f, translate(f), lasso_words(f.atoms, 40, np.random.default_rng(0)))
    assert report.agrees


def test_random_symbol_feasible():
    atoms = [AtomicPredicate(1, "a"), AtomicPredicate(1, "b"), AtomicPredicate(1, "O"), AtomicPredicate(2, "a")]
    rng = np.random.default_rng(9)
    seen = set()
    for _ in range(300):
        symbol = random_symbol(atoms, rng, feasible=True)
        robots = [p.robot for p in symbol]
        assert len(robots) == len(set(robots))
        assert not any(p.is_obstacle for p in symbol)
        seen.add(symbol)
    # 3 options for robot 1 times 2 for robot 2
    assert len(seen) == 6


def test_report_counts():
    f = parse_ltl("F pi_1_a")
    report = cross_validate(f, translate(f), lasso_words(f.atoms, 30, np.random.default_rng(1)))
    assert report.checked == 30
    assert 0 < report.accepted < 30


def _visits(*regions):
    return tuple(Symbol.of(f"pi_1_{r}") for r in regions)


@pytest.mark.parametrize("text, word", [
    (SURVEILLANCE, LassoWord(_visits("l4", "l2", "l8", "l9"), _visits("l6", "l1"))),
    (DELIVERY, LassoWord(_visits("l5", "l7", "l4", "l2", "l6"), _visits("exit"))),
])
def test_case_study_missions_compile(text, word):
    """Full single-robot missions compile in bounded time into a graph that reaches an accepting edge."""
    f = parse_ltl(text)
    started = time.perf_counter()
    automaton = translate(f)
    pruned = prune(automaton)
    graph = compile_formula(text)
    elapsed = time.perf_counter() - started
    logger.info(
        f"{len(automaton.states)} states, {len(automaton.transitions)} transitions, "
        f"{len(pruned.transitions)} after pruning, {len(graph.nodes)} graph nodes in {elapsed:.2f}s"
    )
    assert elapsed < 60.0
    assert graph.dist[AUX] is not None
    assert automaton.accepts(word)
    assert pruned.accepts(word)
    report = cross_validate(f, pruned, lasso_words(f.atoms, 200, np.random.default_rng(3), feasible=True))
    assert report.agrees
