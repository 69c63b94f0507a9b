"""Propositional formulas: syntax tree, evaluation and satisfiability."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Sequence, Union

from ..config import DEFAULT_BUDGETS, BudgetExceededError

Valuation = Mapping[str, bool]


class EvaluationError(KeyError):
    """Raised when a valuation does not cover the atoms of a formula."""


@dataclass(frozen=True, slots=True)
class Atom:
    name: str


@dataclass(frozen=True, slots=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True, slots=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Top:
    pass


@dataclass(frozen=True, slots=True)
class Bottom:
    pass


Formula = Union[Atom, Not, And, Or, Implies, Iff, Top, Bottom]

TOP = Top()
BOTTOM = Bottom()

# Binding strength used by the printer; higher binds tighter.
_PRECEDENCE = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5}
_SYMBOLS = {And: "&", Or: "|", Implies: "->", Iff: "<->"}


def negate(formula: Formula) -> Formula:
    """Negate a formula, collapsing a double negation."""
    if isinstance(formula, Not):
        return formula.operand
    return Not(formula)


def conjunction(formulas: Iterable[Formula]) -> Formula:
    items = list(formulas)
    if not items:
        return TOP
    return reduce(And, items)


def disjunction(formulas: Iterable[Formula]) -> Formula:
    items = list(formulas)
    if not items:
        return BOTTOM
    return reduce(Or, items)


def atoms(formula: Formula) -> FrozenSet[str]:
    """Return the atom names occurring in ``formula``."""
    return frozenset(_iter_atoms(formula))


def _iter_atoms(formula: Formula) -> Iterator[str]:
    stack: List[Formula] = [formula]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            yield node.name
        elif isinstance(node, Not):
            stack.append(node.operand)
        elif isinstance(node, (And, Or, Implies, Iff)):
            stack.append(node.right)
            stack.append(node.left)


def evaluate(formula: Formula, valuation: Valuation) -> bool:
    """Evaluate ``formula`` under ``valuation`` with the usual truth tables."""
    if isinstance(formula, Atom):
        try:
            return bool(valuation[formula.name])
        except KeyError as exc:
            raise EvaluationError(f"Atom '{formula.name}' missing from valuation") from exc
    if isinstance(formula, Not):
        return not evaluate(formula.operand, valuation)
    if isinstance(formula, And):
        return evaluate(formula.left, valuation) and evaluate(formula.right, valuation)
    if isinstance(formula, Or):
        return evaluate(formula.left, valuation) or evaluate(formula.right, valuation)
    if isinstance(formula, Implies):
        return (not evaluate(formula.left, valuation)) or evaluate(formula.right, valuation)
    if isinstance(formula, Iff):
        return evaluate(formula.left, valuation) == evaluate(formula.right, valuation)
    if isinstance(formula, Top):
        return True
    if isinstance(formula, Bottom):
        return False
    raise TypeError(f"Not a formula: {formula!r}")


def valuations(names: Sequence[str], max_atoms: int | None = None) -> Iterator[Dict[str, bool]]:
    """Yield every valuation over ``names`` (all-false first)."""
    limit = DEFAULT_BUDGETS["max_atoms"] if max_atoms is None else max_atoms
    if len(names) > limit:
        raise BudgetExceededError("max_atoms", limit, len(names))
    for values in itertools.product((False, True), repeat=len(names)):
        yield dict(zip(names, values))


def is_satisfiable(formulas: Iterable[Formula], max_atoms: int | None = None) -> bool:
    """Return True when one valuation satisfies every formula.

    Exhaustive model enumeration over the union of atoms.
    """
    items = list(formulas)
    names = sorted(set().union(*(atoms(formula) for formula in items)) if items else set())
    for valuation in valuations(names, max_atoms):
        if all(evaluate(formula, valuation) for formula in items):
            return True
    return False


def is_tautology(formula: Formula, max_atoms: int | None = None) -> bool:
    return not is_satisfiable([Not(formula)], max_atoms)


def to_text(formula: Formula) -> str:
    """Render ``formula`` in the ASCII grammar accepted by ``parse_formula``."""
    return _render(formula, 0)


def _render(formula: Formula, parent: int) -> str:
    if isinstance(formula, Atom):
        return formula.name
    if isinstance(formula, Top):
        return "T"
    if isinstance(formula, Bottom):
        return "F"
    if isinstance(formula, Not):
        return "!" + _render(formula.operand, _PRECEDENCE[Not])
    kind = type(formula)
    level = _PRECEDENCE[kind]
    if kind is Implies:
        # right-associative: only the left operand needs to bind tighter
        left = _render(formula.left, level + 1)
        right = _render(formula.right, level)
    else:
        left = _render(formula.left, level)
        right = _render(formula.right, level + 1)
    text = f"{left} {_SYMBOLS[kind]} {right}"
    return f"({text})" if level < parent else text


def signed(formula: Formula, positive: bool) -> Formula:
    return formula if positive else negate(formula)


def literal_text(formula: Formula, positive: bool) -> str:
    body = to_text(formula)
    if positive:
        return body
    if isinstance(formula, Atom):
        return f"!{body}"
    return f"!({body})"

