"""Judgment aggregation rules."""

from .base import BaseRule, RuleError
from .distance import DistanceRule, DistanceSpec, MedianRule
from .majority import (
    LeximaxRule,
    MaxcardConsistentRule,
    MaxConsistentRule,
    RankedAgendaRule,
    ranked_agenda_by_permutations,
)
from .registry import MAIN_RULE_IDS, UnknownRuleError, get_rule, get_rules
from .repair import MinimalProfileChangeRule, YoungRule, profiles_within
from .scoring import ScoringRule, ScoringSpec, reversal_score

__all__ = [
    "BaseRule",
    "DistanceRule",
    "DistanceSpec",
    "LeximaxRule",
    "MAIN_RULE_IDS",
    "MaxConsistentRule",
    "MaxcardConsistentRule",
    "MedianRule",
    "MinimalProfileChangeRule",
    "RankedAgendaRule",
    "RuleError",
    "ScoringRule",
    "ScoringSpec",
    "UnknownRuleError",
    "YoungRule",
    "get_rule",
    "get_rules",
    "profiles_within",
    "ranked_agenda_by_permutations",
    "reversal_score",
]
