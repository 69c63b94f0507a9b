"""Observed inclusion relationships between two rules."""

from __future__ import annotations

import logging
from typing import Any, Dict, FrozenSet, Iterable, Optional

from ..config import AggregatorConfig
from ..data_models import JudgmentSet, RelationReport, sort_sets
from ..loaders import format_agenda
from ..profile import Profile
from ..rules.base import BaseRule

logger = logging.getLogger(__name__)


def _witness(
    profile: Profile, left: FrozenSet[JudgmentSet], right: FrozenSet[JudgmentSet]
) -> Dict[str, Any]:
    return {
        "agenda": format_agenda(profile.agenda).splitlines(),
        "profile": [str(voter) for voter in profile.voters],
        "left": [str(winner) for winner in sort_sets(left)],
        "right": [str(winner) for winner in sort_sets(right)],
        "extra": [str(winner) for winner in sort_sets(left - right)],
    }


def compare_rules(
    left: BaseRule,
    right: BaseRule,
    profiles: Iterable[Profile],
    config: Optional[AggregatorConfig] = None,
) -> RelationReport:
    """Count inclusions between the winner sets of two rules; keep the first witness each way.

    A single witness in each direction is enough to certify incomparability.
    """
    report = RelationReport(left=left.rule_id, right=right.rule_id)
    for profile in profiles:
        first = left.aggregate(profile, config).winner_set
        second = right.aggregate(profile, config).winner_set
        report.instances += 1
        if first == second:
            report.equal += 1
        if first <= second:
            report.left_in_right += 1
        elif report.left_not_in_right_witness is None:
            report.left_not_in_right_witness = _witness(profile, first, second)
        if second <= first:
            report.right_in_left += 1
        elif report.right_not_in_left_witness is None:
            report.right_not_in_left_witness = _witness(profile, second, first)
        if not first & second:
            report.disjoint += 1
    logger.debug(
        "compare %s/%s: %d instances, relation %s",
        left.rule_id,
        right.rule_id,
        report.instances,
        report.relation,
    )
    return report
