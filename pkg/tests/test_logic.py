from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from judgment_aggregator.config import BudgetExceededError
from judgment_aggregator.logic import (
    TOP,
    And,
    Atom,
    EvaluationError,
    FormulaSyntaxError,
    Iff,
    Implies,
    Not,
    Or,
    atoms,
    evaluate,
    is_satisfiable,
    is_tautology,
    negate,
    parse_formula,
    to_text,
)
from judgment_aggregator.logic.formula import valuations

P, Q, R = Atom("p"), Atom("q"), Atom("r")


def test_parser_respects_precedence():
    assert parse_formula("p & q -> r") == Implies(And(P, Q), R)
    assert parse_formula("p | q & r") == Or(P, And(Q, R))
    assert parse_formula("p -> q -> r") == Implies(P, Implies(Q, R))
    assert parse_formula("p <-> q") == Iff(P, Q)


def test_parser_collapses_double_negation_and_reads_constants():
    assert parse_formula("!!p") == P
    assert parse_formula("!(p & q)") == Not(And(P, Q))
    assert parse_formula("T") == TOP


def test_parser_reports_offset_of_bad_character():
    with pytest.raises(FormulaSyntaxError) as excinfo:
        parse_formula("p $ q")
    assert excinfo.value.offset == 2


@pytest.mark.parametrize("text", ["", "p &", "(p & q", "p q", "& p"])
def test_parser_rejects_malformed_text(text):
    with pytest.raises(FormulaSyntaxError):
        parse_formula(text)


def test_printer_parenthesizes_only_when_needed():
    assert to_text(Implies(Implies(P, Q), R)) == "(p -> q) -> r"
    assert to_text(And(Or(P, Q), R)) == "(p | q) & r"
    assert to_text(Not(And(P, Q))) == "!(p & q)"
    assert to_text(And(And(P, Q), R)) == "p & q & r"


def test_evaluation_and_satisfiability():
    assert evaluate(Implies(P, Q), {"p": False, "q": False})
    assert not evaluate(Iff(P, Q), {"p": True, "q": False})
    assert not is_satisfiable([P, Not(P)])
    assert is_satisfiable([P, Implies(P, Q), Q])
    assert is_tautology(Or(P, Not(P)))
    assert not is_tautology(Or(P, Q))


def test_evaluation_needs_every_atom():
    with pytest.raises(EvaluationError):
        evaluate(And(P, Q), {"p": True})


def test_valuations_respect_atom_budget():
    assert len(list(valuations(["p", "q"]))) == 4
    with pytest.raises(BudgetExceededError):
        list(valuations(["p", "q", "r"], max_atoms=2))


def test_atoms_and_negate():
    assert atoms(Implies(And(P, Q), Not(R))) == frozenset({"p", "q", "r"})
    assert negate(Not(P)) == P
    assert negate(P) == Not(P)


_ATOMS = st.sampled_from([P, Q, R])


def _extend(children):
    binary = st.sampled_from([And, Or, Implies, Iff])
    return st.one_of(
        children.map(negate),
        st.builds(lambda kind, left, right: kind(left, right), binary, children, children),
    )


@settings(max_examples=60, deadline=None)
@given(st.recursive(_ATOMS, _extend, max_leaves=6))
def test_printed_formula_parses_back(formula):
    assert parse_formula(to_text(formula)) == formula
