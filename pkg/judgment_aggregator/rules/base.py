"""Base rule definitions."""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from ..config import AggregatorConfig
from ..data_models import JudgmentSet, RuleDefinition, RuleOutcome, Score, sort_sets
from ..profile import Profile


class RuleError(RuntimeError):
    """Raised when a rule produces an outcome that breaks the rule contract."""


class BaseRule(ABC):
    """Abstract judgment aggregation rule."""

    rule_id: str = ""

    @abstractmethod
    def get_definition(self) -> RuleDefinition:
        """Return rule metadata."""

    @abstractmethod
    def select(self, profile: Profile, config: AggregatorConfig) -> RuleOutcome:
        """Compute the winning judgment sets of ``profile``."""

    def aggregate(self, profile: Profile, config: Optional[AggregatorConfig] = None) -> RuleOutcome:
        """Apply the rule and return a validated outcome with sorted winners."""
        outcome = self.select(profile, config or AggregatorConfig())
        outcome.winners = sort_sets(outcome.winners)
        if not outcome.winners:
            raise RuleError(f"Rule '{self.rule_id}' returned no winners")
        for winner in outcome.winners:
            if not profile.agenda.is_rational(winner):
                raise RuleError(f"Rule '{self.rule_id}' returned a non-rational set {winner}")
        return outcome

    def winners(
        self, profile: Profile, config: Optional[AggregatorConfig] = None
    ) -> List[JudgmentSet]:
        return self.aggregate(profile, config).winners

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.rule_id!r})"


def best_candidates(
    candidates: Iterable[JudgmentSet],
    score: Callable[[JudgmentSet], Score],
    maximize: bool = True,
) -> Tuple[List[JudgmentSet], Dict[JudgmentSet, Score]]:
    """Candidates with the best score, and the scores of every candidate."""
    scores = {candidate: score(candidate) for candidate in candidates}
    target = max(scores.values()) if maximize else min(scores.values())
    winners = [candidate for candidate, value in scores.items() if value == target]
    return winners, scores
