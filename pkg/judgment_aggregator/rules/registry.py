"""Rule identifiers and lookup.

Fixed identifiers name the rules of the catalogue; ``dist:<distance>:<aggregator>``
and ``score:<name>`` build distance-based and scoring rules on demand.
"""

from __future__ import annotations

from typing import Callable, Dict, List

from .base import BaseRule
from .distance import (
    AGGREGATORS,
    DistanceRule,
    DistanceSpec,
    MedianRule,
    geodesic_sum_rule,
    hamming_max_rule,
    hamming_sum_rule,
)
from .majority import LeximaxRule, MaxcardConsistentRule, MaxConsistentRule, RankedAgendaRule
from .repair import MinimalProfileChangeRule, YoungRule
from .scoring import SCORE_FUNCTIONS, ScoringRule, ScoringSpec, reversal_rule


class UnknownRuleError(ValueError):
    """Raised when a rule identifier does not name a rule."""

    def __init__(self, rule_id: str) -> None:
        self.rule_id = rule_id
        super().__init__(f"Unknown rule identifier '{rule_id}'")


RULE_FACTORIES: Dict[str, Callable[[], BaseRule]] = {
    "mc": MaxConsistentRule,
    "mcc": MaxcardConsistentRule,
    "med": MedianRule,
    "ra": RankedAgendaRule,
    "leximax": LeximaxRule,
    "young": YoungRule,
    "mpc": MinimalProfileChangeRule,
    "dmax-hamming": hamming_max_rule,
    "dsum-geodesic": geodesic_sum_rule,
    "frev": reversal_rule,
    "dsum-hamming": hamming_sum_rule,
}

# The rules of the catalogue, in presentation order.
MAIN_RULE_IDS: List[str] = [
    "mc",
    "mcc",
    "med",
    "ra",
    "leximax",
    "young",
    "mpc",
    "dmax-hamming",
    "dsum-geodesic",
    "frev",
]

MAJORITY_PRESERVING_RULE_IDS = ["mc", "mcc", "med", "ra", "leximax", "young", "mpc"]
SCORING_RULE_IDS = ["med", "frev"]


def get_rule(rule_id: str) -> BaseRule:
    """Return a rule instance for ``rule_id``."""
    factory = RULE_FACTORIES.get(rule_id)
    if factory is not None:
        return factory()
    if rule_id.startswith("dist:"):
        parts = rule_id.split(":")
        valid = len(parts) == 3 and parts[1] in ("hamming", "geodesic")
        if not valid or parts[2] not in AGGREGATORS:
            raise UnknownRuleError(rule_id)
        return DistanceRule(DistanceSpec(parts[1], parts[2]))
    if rule_id.startswith("score:"):
        name = rule_id.split(":", 1)[1]
        if name not in SCORE_FUNCTIONS:
            raise UnknownRuleError(rule_id)
        return ScoringRule(ScoringSpec(name))
    raise UnknownRuleError(rule_id)


def get_rules(rule_ids: List[str]) -> List[BaseRule]:
    return [get_rule(rule_id) for rule_id in rule_ids]
