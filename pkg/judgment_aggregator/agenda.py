"""Agendas with integrity constraints and their rational judgment sets."""

from __future__ import annotations

from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence

from .config import DEFAULT_BUDGETS, BudgetExceededError
from .data_models import NEG, POS, Element, JudgmentSet, element_key, sort_sets
from .logic.formula import (
    TOP,
    Formula,
    Not,
    atoms,
    evaluate,
    is_satisfiable,
    literal_text,
    signed,
    to_text,
    valuations,
)
from .metrics.distances import betweenness_graph, shortest_paths


class AgendaError(ValueError):
    """Raised when an agenda or a judgment set violates agenda invariants."""


class Agenda:
    """Ordered issue list plus a consistency notion.

    Consistency is given either by a constraint formula or by an explicit list of
    rational sign vectors (extensional agendas).
    """

    def __init__(
        self,
        issues: Sequence[Formula],
        constraint: Optional[Formula] = None,
        rational: Optional[Iterable[JudgmentSet]] = None,
        *,
        name: str = "",
        max_atoms: Optional[int] = None,
        max_issues: Optional[int] = None,
    ) -> None:
        self.issues = tuple(issues)
        self.name = name
        self.max_atoms = DEFAULT_BUDGETS["max_atoms"] if max_atoms is None else max_atoms
        self.max_issues = DEFAULT_BUDGETS["max_issues"] if max_issues is None else max_issues
        if constraint is not None and rational is not None:
            raise AgendaError("An agenda takes either a constraint or a rational set list")
        self.declared = None if rational is None else tuple(rational)
        self.constraint = TOP if constraint is None and rational is None else constraint
        self._validate()

    @classmethod
    def with_constraint(
        cls, issues: Sequence[Formula], constraint: Formula = TOP, **kwargs
    ) -> "Agenda":
        return cls(issues, constraint=constraint, **kwargs)

    @classmethod
    def extensional(
        cls, issues: Sequence[Formula], rational: Iterable[JudgmentSet], **kwargs
    ) -> "Agenda":
        return cls(issues, rational=rational, **kwargs)

    def _validate(self) -> None:
        if not self.issues:
            raise AgendaError("An agenda needs at least one issue")
        if len(self.issues) > self.max_issues:
            raise BudgetExceededError("max_issues", self.max_issues, len(self.issues))
        if len(set(self.issues)) != len(self.issues):
            raise AgendaError("Issue formulas must be pairwise distinct")
        for issue in self.issues:
            if isinstance(issue, Not):
                raise AgendaError(f"Issue '{to_text(issue)}' is negated at top level")
            if not is_satisfiable([issue], self.max_atoms):
                raise AgendaError(f"Issue '{to_text(issue)}' is a contradiction")
            if not is_satisfiable([Not(issue)], self.max_atoms):
                raise AgendaError(f"Issue '{to_text(issue)}' is a tautology")
        if self.declared is not None:
            if not self.declared:
                raise AgendaError("An extensional agenda needs at least one rational set")
            for judgment in self.declared:
                if len(judgment) != len(self.issues) or not judgment.is_complete:
                    raise AgendaError(f"Rational set {judgment} does not fit the agenda")
            if len(set(self.declared)) != len(self.declared):
                raise AgendaError("Rational sets of an extensional agenda must be distinct")

    def __len__(self) -> int:
        return len(self.issues)

    def __repr__(self) -> str:
        return f"Agenda(name={self.name!r}, issues={len(self.issues)})"

    @property
    def is_extensional(self) -> bool:
        return self.declared is not None

    @cached_property
    def atom_names(self) -> List[str]:
        names = set().union(*(atoms(issue) for issue in self.issues))
        if self.constraint is not None:
            names |= atoms(self.constraint)
        return sorted(names)

    @cached_property
    def rational_sets(self) -> List[JudgmentSet]:
        """All complete consistent judgment sets, ordered lexicographically (+ before -)."""
        if self.declared is not None:
            return sort_sets(self.declared)
        found = set()
        for valuation in valuations(self.atom_names, self.max_atoms):
            if evaluate(self.constraint, valuation):
                found.add(
                    JudgmentSet(
                        tuple(POS if evaluate(issue, valuation) else NEG for issue in self.issues)
                    )
                )
        if not found:
            raise AgendaError("The integrity constraint is contradictory")
        return sort_sets(found)

    @cached_property
    def index_of(self) -> Dict[JudgmentSet, int]:
        return {judgment: index for index, judgment in enumerate(self.rational_sets)}

    @cached_property
    def geodesic_table(self) -> List[List[int]]:
        table = shortest_paths(betweenness_graph(self.rational_sets))
        if any(length < 0 for row in table for length in row):
            raise AgendaError("The betweenness graph of this agenda is disconnected")
        return table

    def enumerate_rational_sets(self) -> List[JudgmentSet]:
        return list(self.rational_sets)

    def is_rational(self, judgment: JudgmentSet) -> bool:
        return judgment in self.index_of

    def _check_size(self, judgment: JudgmentSet) -> None:
        if len(judgment) != len(self.issues):
            raise AgendaError(
                f"Judgment set {judgment} has {len(judgment)} signs, "
                f"agenda has {len(self.issues)} issues"
            )

    def is_consistent(self, judgment: JudgmentSet) -> bool:
        """True when some rational set carries every decided sign of ``judgment``."""
        self._check_size(judgment)
        return any(judgment.agrees_with(candidate) for candidate in self.rational_sets)

    def formula_set(self, judgment: JudgmentSet) -> List[Formula]:
        """The formulas selected by ``judgment``, together with the constraint."""
        self._check_size(judgment)
        selected = [
            signed(issue, sign == POS)
            for issue, sign in zip(self.issues, judgment.signs)
            if sign != 0
        ]
        return selected + [self.constraint] if self.constraint is not None else selected

    def is_consistent_by_models(self, judgment: JudgmentSet) -> bool:
        """Consistency through satisfiability of the selected formulas (constraint agendas)."""
        if self.is_extensional:
            return self.is_consistent(judgment)
        return is_satisfiable(self.formula_set(judgment), self.max_atoms)

    def extensions(self, judgment: JudgmentSet) -> List[JudgmentSet]:
        """Rational completions of a consistent partial judgment set."""
        self._check_size(judgment)
        found = [candidate for candidate in self.rational_sets if judgment.agrees_with(candidate)]
        if not found:
            raise AgendaError(f"Judgment set {judgment} is inconsistent")
        return found

    def extensions_of_elements(self, elements: Iterable[Element]) -> List[JudgmentSet]:
        return self.extensions(JudgmentSet.from_elements(len(self.issues), elements))

    def max_consistent_subsets(self, elements: Iterable[Element]) -> List[FrozenSet[Element]]:
        """Maximal consistent subsets of a set of agenda elements.

        Every consistent subset extends to a rational set, so the candidates are the
        traces of the rational sets on ``elements``; only inclusion-maximal traces remain.
        """
        target = self._elements(elements)
        traces = {target & candidate.elements() for candidate in self.rational_sets}
        maximal = [trace for trace in traces if not any(trace < other for other in traces)]
        return sorted(maximal, key=_subset_key)

    def maxcard_consistent_subsets(self, elements: Iterable[Element]) -> List[FrozenSet[Element]]:
        maximal = self.max_consistent_subsets(elements)
        best = max(len(subset) for subset in maximal)
        return [subset for subset in maximal if len(subset) == best]

    def _elements(self, elements: Iterable[Element]) -> FrozenSet[Element]:
        target = frozenset(elements)
        for issue, sign in target:
            if not 0 <= issue < len(self.issues) or sign not in (POS, NEG):
                raise AgendaError(f"({issue}, {sign}) is not an element of this agenda")
        return target

    def element_text(self, element: Element) -> str:
        issue, sign = element
        return literal_text(self.issues[issue], sign == POS)

    def describe(self, judgment: JudgmentSet) -> str:
        """Render the decided elements of ``judgment`` as a formula set."""
        ordered = sorted(judgment.elements(), key=element_key)
        parts = [self.element_text(element) for element in ordered]
        return "{" + ", ".join(parts) + "}"


def _subset_key(subset: FrozenSet[Element]) -> tuple:
    return (-len(subset), sorted(element_key(element) for element in subset))
