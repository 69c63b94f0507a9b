"""Propositional language used for agendas and integrity constraints."""

from .formula import (
    BOTTOM,
    TOP,
    And,
    Atom,
    Bottom,
    EvaluationError,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Top,
    atoms,
    conjunction,
    disjunction,
    evaluate,
    is_satisfiable,
    is_tautology,
    negate,
    to_text,
)
from .parser import FormulaSyntaxError, parse_formula

__all__ = [
    "BOTTOM",
    "TOP",
    "And",
    "Atom",
    "Bottom",
    "EvaluationError",
    "Formula",
    "FormulaSyntaxError",
    "Iff",
    "Implies",
    "Not",
    "Or",
    "Top",
    "atoms",
    "conjunction",
    "disjunction",
    "evaluate",
    "is_satisfiable",
    "is_tautology",
    "negate",
    "parse_formula",
    "to_text",
]
