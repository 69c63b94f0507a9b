"""Scoring rules F_s, with the reversal score as the main preset."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Mapping, Optional, Tuple

from ..agenda import Agenda
from ..config import AggregatorConfig
from ..data_models import Element, JudgmentSet, RuleDefinition, RuleOutcome, Score
from ..metrics.distances import hamming
from ..profile import Profile
from .base import BaseRule, best_candidates

ScoreFunction = Callable[[Agenda, JudgmentSet, Element], Score]


def reversal_score(agenda: Agenda, judgment: JudgmentSet, element: Element) -> int:
    """Fewest issue reversals taking ``judgment`` to a rational set without ``element``.

    Zero when ``element`` is not in ``judgment``. An element held by every rational
    set scores zero as well; it is common to all candidates and cannot move the argmax.
    """
    issue, sign = element
    if judgment.signs[issue] != sign:
        return 0
    distances = [
        hamming(judgment, candidate)
        for candidate in agenda.rational_sets
        if candidate.signs[issue] != sign
    ]
    return min(distances) if distances else 0


def membership_score(agenda: Agenda, judgment: JudgmentSet, element: Element) -> int:
    """1 when ``element`` is in ``judgment``; the scoring rule it induces is the median rule."""
    issue, sign = element
    return 1 if judgment.signs[issue] == sign else 0


SCORE_FUNCTIONS: Dict[str, ScoreFunction] = {
    "rev": reversal_score,
    "median": membership_score,
}


@dataclass(slots=True)
class ScoringSpec:
    """A named score function s(J, phi), or an explicit score table."""

    name: str
    function: Optional[ScoreFunction] = None
    table: Optional[Mapping[Tuple[JudgmentSet, Element], Score]] = None

    def __post_init__(self) -> None:
        if self.function is None and self.table is None:
            if self.name not in SCORE_FUNCTIONS:
                raise ValueError(f"Unknown score function '{self.name}'")
            self.function = SCORE_FUNCTIONS[self.name]
        if self.table is not None:
            for value in self.table.values():
                if value < 0:
                    raise ValueError("Score tables hold nonnegative values")

    def score(self, agenda: Agenda, judgment: JudgmentSet, element: Element) -> Score:
        if self.table is not None:
            return Fraction(self.table.get((judgment, element), 0))
        assert self.function is not None
        return self.function(agenda, judgment, element)


class ScoringRule(BaseRule):
    """Rational sets maximizing the summed scores of their elements over all voters."""

    def __init__(self, spec: ScoringSpec, rule_id: Optional[str] = None) -> None:
        self.spec = spec
        self.rule_id = rule_id or f"score:{spec.name}"

    def get_definition(self) -> RuleDefinition:
        return RuleDefinition(
            rule_id=self.rule_id,
            name=f"F_{self.spec.name}",
            family="scoring",
            description="argmax over rational J of sum over phi in J and voters i of s(J_i, phi)",
        )

    def element_totals(self, profile: Profile) -> Dict[Element, Score]:
        """Sum over voters of s(J_i, phi), for every agenda element phi."""
        agenda = profile.agenda
        totals: Dict[Element, Score] = {}
        for voter, count in profile.groups():
            for issue in range(len(agenda)):
                for sign in (1, -1):
                    element = (issue, sign)
                    value = count * self.spec.score(agenda, voter, element)
                    totals[element] = totals.get(element, 0) + value
        return totals

    def total_score(self, profile: Profile, judgment: JudgmentSet) -> Score:
        totals = self.element_totals(profile)
        return sum(totals[element] for element in judgment.elements())

    def select(self, profile: Profile, config: AggregatorConfig) -> RuleOutcome:
        totals = self.element_totals(profile)
        winners, scores = best_candidates(
            profile.agenda.rational_sets,
            lambda candidate: sum(totals[element] for element in candidate.elements()),
        )
        return RuleOutcome(
            rule_id=self.rule_id,
            winners=winners,
            scores={winner: scores[winner] for winner in winners},
        )


def reversal_rule() -> ScoringRule:
    return ScoringRule(ScoringSpec("rev"), rule_id="frev")
