"""Median rule and distance-based rules F^{d,*}."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Mapping, Optional, Sequence, Tuple

from ..agenda import Agenda
from ..config import AggregatorConfig
from ..data_models import JudgmentSet, RuleDefinition, RuleOutcome, Score
from ..metrics.distances import geodesic_distance, hamming
from ..profile import Profile
from .base import BaseRule, best_candidates

DISTANCES = ("hamming", "geodesic", "table")
AGGREGATORS: Dict[str, Callable[[Sequence[Score]], Score]] = {"sum": sum, "max": max}


class DistanceSpecError(ValueError):
    """Raised for an unknown distance or aggregator, or an invalid distance table."""


class MedianRule(BaseRule):
    """Rational sets maximizing the summed support of their elements."""

    rule_id = "med"

    def get_definition(self) -> RuleDefinition:
        return RuleDefinition(
            rule_id=self.rule_id,
            name="Median",
            family="scoring",
            description="argmax over rational J of the sum of N(P, phi) for phi in J",
        )

    def select(self, profile: Profile, config: AggregatorConfig) -> RuleOutcome:
        support = profile.support_table()
        winners, scores = best_candidates(
            profile.agenda.rational_sets,
            lambda candidate: sum(support[element] for element in candidate.elements()),
        )
        return RuleOutcome(
            rule_id=self.rule_id,
            winners=winners,
            scores={winner: scores[winner] for winner in winners},
        )


@dataclass(slots=True)
class DistanceSpec:
    """Distance between rational sets plus the aggregator over voters."""

    distance: str = "hamming"
    aggregator: str = "sum"
    table: Optional[Mapping[Tuple[JudgmentSet, JudgmentSet], Score]] = field(default=None)

    def __post_init__(self) -> None:
        if self.distance not in DISTANCES:
            raise DistanceSpecError(f"Unknown distance '{self.distance}'")
        if self.aggregator not in AGGREGATORS:
            raise DistanceSpecError(f"Unknown aggregator '{self.aggregator}'")
        if (self.distance == "table") != (self.table is not None):
            raise DistanceSpecError("A distance table goes with distance='table' only")

    @property
    def rule_id(self) -> str:
        return f"dist:{self.distance}:{self.aggregator}"

    def measure(self, agenda: Agenda) -> Callable[[JudgmentSet, JudgmentSet], Score]:
        if self.distance == "hamming":
            return hamming
        if self.distance == "geodesic":
            return lambda first, second: geodesic_distance(agenda, first, second)
        table = self.table or {}
        validate_distance_table(agenda, table)
        return lambda first, second: table[(first, second)]


def validate_distance_table(
    agenda: Agenda, table: Mapping[Tuple[JudgmentSet, JudgmentSet], Score]
) -> None:
    """Check that ``table`` is a pseudo-distance over the rational sets of ``agenda``."""
    rational = agenda.rational_sets
    for first in rational:
        for second in rational:
            try:
                value = table[(first, second)]
                mirrored = table[(second, first)]
            except KeyError as exc:
                raise DistanceSpecError(f"Distance table misses the pair {exc.args[0]}") from exc
            if value != mirrored:
                raise DistanceSpecError(f"Distance table is not symmetric at {first}, {second}")
            if (value == 0) != (first == second) or value < 0:
                raise DistanceSpecError(
                    f"Distance table is not a pseudo-distance at {first}, {second}"
                )


class DistanceRule(BaseRule):
    """Rational sets minimizing the aggregated distance to the voters."""

    def __init__(self, spec: DistanceSpec, rule_id: Optional[str] = None) -> None:
        self.spec = spec
        self.rule_id = rule_id or spec.rule_id

    def get_definition(self) -> RuleDefinition:
        return RuleDefinition(
            rule_id=self.rule_id,
            name=f"F^({self.spec.distance},{self.spec.aggregator})",
            family="distance",
            description=(
                f"argmin over rational J of {self.spec.aggregator} of "
                f"{self.spec.distance} distances to the voters"
            ),
        )

    def select(self, profile: Profile, config: AggregatorConfig) -> RuleOutcome:
        measure = self.spec.measure(profile.agenda)
        aggregate = AGGREGATORS[self.spec.aggregator]
        groups = profile.groups()

        def total(candidate: JudgmentSet) -> Score:
            if self.spec.aggregator == "sum":
                return sum(count * measure(candidate, voter) for voter, count in groups)
            return aggregate([measure(candidate, voter) for voter, _ in groups])

        winners, scores = best_candidates(profile.agenda.rational_sets, total, maximize=False)
        return RuleOutcome(
            rule_id=self.rule_id,
            winners=winners,
            scores={winner: scores[winner] for winner in winners},
        )


def hamming_sum_rule() -> DistanceRule:
    return DistanceRule(DistanceSpec("hamming", "sum"), rule_id="dsum-hamming")


def hamming_max_rule() -> DistanceRule:
    return DistanceRule(DistanceSpec("hamming", "max"), rule_id="dmax-hamming")


def geodesic_sum_rule() -> DistanceRule:
    return DistanceRule(DistanceSpec("geodesic", "sum"), rule_id="dsum-geodesic")
