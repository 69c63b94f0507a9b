"""Agreement between judgment rules on preference agendas and classical voting rules."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..agenda import Agenda
from ..config import AggregatorConfig
from ..data_models import CorrespondenceResult, RuleOutcome
from ..rules.registry import get_rule
from . import voting
from .preferences import (
    PreferenceProfile,
    build_preference_agenda,
    decode_orders,
    decode_winners,
    encode,
)

logger = logging.getLogger(__name__)

# orders: decoded winning rankings equal the reference rankings.
# winners: decoded nondominated alternatives equal the reference winners.
# refines-*: the decoded result is contained in the reference result.
KINDS = ("orders", "winners", "refines-orders", "refines-winners")


@dataclass(frozen=True, slots=True)
class Correspondence:
    rule_id: str
    constraint: str
    reference: str
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"Unknown correspondence kind '{self.kind}'")


REFERENCES: Dict[str, Callable[[PreferenceProfile], list]] = {
    "kemeny": voting.kemeny_orders,
    "slater": voting.slater_winners,
    "copeland": voting.copeland_winners,
    "top-cycle": voting.top_cycle,
    "condorcet-or-all": voting.condorcet_or_all,
    "ranked-pairs": voting.ranked_pairs_orders,
    "maximin": voting.maximin_winners,
    "young": voting.young_winners,
    "borda": voting.borda_orders,
}

CORRESPONDENCES: List[Correspondence] = [
    Correspondence("med", "Tr", "kemeny", "orders"),
    Correspondence("mcc", "Tr", "slater", "winners"),
    Correspondence("mcc", "W", "copeland", "winners"),
    Correspondence("mc", "Tr", "top-cycle", "winners"),
    Correspondence("mc", "W", "condorcet-or-all", "winners"),
    Correspondence("ra", "Tr", "ranked-pairs", "orders"),
    Correspondence("ra", "W", "maximin", "winners"),
    Correspondence("young", "W", "young", "winners"),
    Correspondence("frev", "Tr", "borda", "orders"),
    Correspondence("leximax", "Tr", "ranked-pairs", "refines-orders"),
    Correspondence("leximax", "W", "maximin", "refines-winners"),
]


def decoded(outcome: RuleOutcome, kind: str, alternatives: Sequence[str]) -> List:
    if kind.endswith("orders"):
        return decode_orders(outcome, alternatives)
    return decode_winners(outcome, alternatives)


def agrees(kind: str, actual: Sequence, expected: Sequence) -> bool:
    if kind.startswith("refines"):
        return set(actual) <= set(expected)
    return set(actual) == set(expected)


class _AgendaCache:
    """One preference agenda per (alternatives, constraint)."""

    def __init__(self, config: AggregatorConfig) -> None:
        self.config = config
        self._agendas: Dict[Tuple[Tuple[str, ...], str], Agenda] = {}

    def get(self, alternatives: Tuple[str, ...], constraint: str) -> Agenda:
        key = (alternatives, constraint)
        if key not in self._agendas:
            self._agendas[key] = build_preference_agenda(
                alternatives, constraint, self.config.budget("max_alternatives")
            )
        return self._agendas[key]


def evaluate_correspondence(
    correspondence: Correspondence,
    preferences: PreferenceProfile,
    agenda: Agenda,
    config: Optional[AggregatorConfig] = None,
) -> Tuple[bool, Dict[str, object]]:
    """Compare one rule with its reference on one preference profile."""
    outcome = get_rule(correspondence.rule_id).aggregate(encode(preferences, agenda), config)
    actual = decoded(outcome, correspondence.kind, preferences.alternatives)
    expected = REFERENCES[correspondence.reference](preferences)
    report = {
        "alternatives": list(preferences.alternatives),
        "orders": [" > ".join(order) for order in preferences.orders],
        "decoded": [_render(item) for item in actual],
        "reference": [_render(item) for item in expected],
    }
    return agrees(correspondence.kind, actual, expected), report


def _render(item) -> str:
    return item if isinstance(item, str) else " > ".join(item)


def check_correspondences(
    profiles: Iterable[PreferenceProfile],
    correspondences: Optional[Sequence[Correspondence]] = None,
    config: Optional[AggregatorConfig] = None,
) -> List[CorrespondenceResult]:
    """Check every correspondence on every profile.

    Mismatches on odd numbers of voters fail the correspondence; mismatches on even
    numbers are only counted and logged.
    """
    config = config or AggregatorConfig()
    selected = list(correspondences or CORRESPONDENCES)
    agendas = _AgendaCache(config)
    results = [
        CorrespondenceResult(item.rule_id, item.constraint, item.reference, item.kind)
        for item in selected
    ]
    for preferences in profiles:
        for item, result in zip(selected, results):
            agenda = agendas.get(preferences.alternatives, item.constraint)
            ok, report = evaluate_correspondence(item, preferences, agenda, config)
            result.instances += 1
            if ok:
                continue
            if preferences.n % 2 == 0:
                result.even_mismatches += 1
                logger.warning(
                    "%s+%s differs from %s on %d voters: %s",
                    item.rule_id,
                    item.constraint,
                    item.reference,
                    preferences.n,
                    report["orders"],
                )
                continue
            result.mismatches += 1
            if result.witness is None:
                result.witness = report
    for result in results:
        logger.debug(
            "%s+%s vs %s: %d instances, %d mismatches",
            result.rule_id,
            result.constraint,
            result.reference,
            result.instances,
            result.mismatches,
        )
    return results


def bridge_report(
    preferences: PreferenceProfile, config: Optional[AggregatorConfig] = None
) -> Dict[str, object]:
    """Reference outputs and decoded judgment outcomes for one preference profile."""
    config = config or AggregatorConfig()
    agendas = _AgendaCache(config)
    references = {
        name: [_render(item) for item in compute(preferences)]
        for name, compute in REFERENCES.items()
    }
    rows = []
    for item in CORRESPONDENCES:
        agenda = agendas.get(preferences.alternatives, item.constraint)
        ok, report = evaluate_correspondence(item, preferences, agenda, config)
        rows.append(
            {
                "rule": item.rule_id,
                "constraint": item.constraint,
                "reference": item.reference,
                "kind": item.kind,
                "decoded": report["decoded"],
                "agrees": ok,
            }
        )
    return {
        "alternatives": list(preferences.alternatives),
        "voters": preferences.n,
        "references": references,
        "correspondences": rows,
    }
