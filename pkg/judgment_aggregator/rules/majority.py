"""Rules built on the majoritarian set and on support levels."""

from __future__ import annotations

import itertools
import math
from typing import Dict, Iterable, List, Set, Tuple

from ..agenda import Agenda
from ..config import AggregatorConfig, BudgetExceededError
from ..data_models import (
    UNDECIDED,
    Element,
    JudgmentSet,
    RuleDefinition,
    RuleOutcome,
    sort_elements,
)
from ..profile import Profile
from .base import BaseRule, best_candidates


def _subset_text(profile: Profile, subset: Iterable[Element]) -> List[str]:
    return [profile.agenda.element_text(element) for element in sort_elements(subset)]


class MaxConsistentRule(BaseRule):
    """Union of the extensions of every maximal consistent subset of m(P)."""

    rule_id = "mc"

    def get_definition(self) -> RuleDefinition:
        return RuleDefinition(
            rule_id=self.rule_id,
            name="Maximal Condorcet",
            family="majority",
            description="ext(S) for every maximal consistent subset S of the majoritarian set",
        )

    def select(self, profile: Profile, config: AggregatorConfig) -> RuleOutcome:
        agenda = profile.agenda
        majority = profile.majoritarian_set().elements()
        winners: Set[JudgmentSet] = set()
        witnesses = []
        for subset in agenda.max_consistent_subsets(majority):
            extensions = agenda.extensions_of_elements(subset)
            winners.update(extensions)
            witnesses.append(
                {
                    "subset": _subset_text(profile, subset),
                    "extensions": [str(extension) for extension in extensions],
                }
            )
        return RuleOutcome(rule_id=self.rule_id, winners=list(winners), witnesses=witnesses)


class MaxcardConsistentRule(BaseRule):
    """Rational sets agreeing with m(P) on as many elements as possible."""

    rule_id = "mcc"

    def get_definition(self) -> RuleDefinition:
        return RuleDefinition(
            rule_id=self.rule_id,
            name="Maxcard Condorcet",
            family="majority",
            description="argmax over rational J of |J ∩ m(P)|",
        )

    def select(self, profile: Profile, config: AggregatorConfig) -> RuleOutcome:
        agenda = profile.agenda
        majority = profile.majoritarian_set().elements()
        winners, scores = best_candidates(
            agenda.rational_sets, lambda candidate: len(majority & candidate.elements())
        )
        witnesses = [
            {"subset": _subset_text(profile, subset)}
            for subset in agenda.maxcard_consistent_subsets(majority)
        ]
        return RuleOutcome(
            rule_id=self.rule_id,
            winners=winners,
            scores={winner: scores[winner] for winner in winners},
            witnesses=witnesses,
        )


def ra_dominates(support: Dict[Element, int], first: JudgmentSet, second: JudgmentSet) -> bool:
    """Ranked-agenda dominance of ``first`` over ``second``.

    ``first`` dominates when both sets agree on every element supported above some
    level and, at that level, the elements of ``second`` are a strict subset of those
    of ``first``. For complete sets this reduces to comparing the best support found in
    each side of their symmetric difference.
    """
    only_first = first.elements() - second.elements()
    if not only_first:
        return False
    only_second = second.elements() - first.elements()
    return max(support[element] for element in only_first) > max(
        support[element] for element in only_second
    )


class RankedAgendaRule(BaseRule):
    """Rational sets undominated in the ranked-agenda order."""

    rule_id = "ra"

    def get_definition(self) -> RuleDefinition:
        return RuleDefinition(
            rule_id=self.rule_id,
            name="Ranked Agenda",
            family="majority",
            description="fix elements by non-increasing support while consistency allows",
        )

    def select(self, profile: Profile, config: AggregatorConfig) -> RuleOutcome:
        support = profile.support_table()
        candidates = profile.agenda.rational_sets
        winners = [
            candidate
            for candidate in candidates
            if not any(ra_dominates(support, other, candidate) for other in candidates)
        ]
        return RuleOutcome(rule_id=self.rule_id, winners=winners)


def ranked_agenda_by_permutations(profile: Profile, max_group: int = 8) -> List[JudgmentSet]:
    """Ranked agenda through the procedural definition, over every order of tied elements.

    Tied support levels are expanded with all of their permutations; ``max_group``
    bounds the size of a tie group.
    """
    agenda = profile.agenda
    support = profile.support_table()
    levels: Dict[int, List[Element]] = {}
    for element, count in support.items():
        levels.setdefault(count, []).append(element)

    states: Set[JudgmentSet] = {JudgmentSet.undecided(len(agenda))}
    for count in sorted(levels, reverse=True):
        group = sort_elements(levels[count])
        if len(group) > max_group:
            raise BudgetExceededError("ra_tie_group", max_group, len(group))
        next_states: Set[JudgmentSet] = set()
        for state in states:
            for order in itertools.permutations(group):
                next_states.add(_fix_in_order(agenda, state, order))
        states = next_states
    return sorted(states, key=lambda judgment: judgment.sort_key)


def _fix_in_order(agenda: Agenda, state: JudgmentSet, order: Tuple[Element, ...]) -> JudgmentSet:
    for issue, sign in order:
        if state.signs[issue] != UNDECIDED:
            continue
        candidate = state.with_sign(issue, sign)
        if agenda.is_consistent(candidate):
            state = candidate
    return state


def leximax_levels(n: int) -> range:
    """Support levels compared by leximax, from n down to n/2 (rounded up)."""
    return range(n, math.ceil(n / 2) - 1, -1)


def leximax_vector(
    support: Dict[Element, int], n: int, judgment: JudgmentSet
) -> Tuple[int, ...]:
    """Counts of elements of ``judgment`` at each support level, highest level first."""
    held: Dict[int, int] = {}
    for element in judgment.elements():
        held[support[element]] = held.get(support[element], 0) + 1
    return tuple(held.get(level, 0) for level in leximax_levels(n))


class LeximaxRule(BaseRule):
    """Rational sets with the lexicographically largest support profile."""

    rule_id = "leximax"

    def get_definition(self) -> RuleDefinition:
        return RuleDefinition(
            rule_id=self.rule_id,
            name="Leximax",
            family="majority",
            description="lexicographic comparison of per-level element counts, top level first",
        )

    def select(self, profile: Profile, config: AggregatorConfig) -> RuleOutcome:
        support = profile.support_table()
        winners, vectors = best_candidates(
            profile.agenda.rational_sets,
            lambda candidate: leximax_vector(support, profile.n, candidate),
        )
        return RuleOutcome(
            rule_id=self.rule_id,
            winners=winners,
            details={"levels": list(leximax_levels(profile.n))},
            witnesses=[{"set": str(winner), "counts": list(vectors[winner])} for winner in winners],
        )

