"""Rules that repair the profile until its majoritarian set is consistent.

Young removes as few voters as possible; minimal profile change (MPC) reverses as
few individual judgments as possible.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from ..config import AggregatorConfig, BudgetExceededError
from ..data_models import POS, JudgmentSet, RuleDefinition, RuleOutcome
from ..metrics.distances import hamming
from ..profile import Profile, majoritarian_from_counts
from .base import BaseRule

logger = logging.getLogger(__name__)


def removal_vectors(counts: Sequence[int], total: int) -> Iterator[Tuple[int, ...]]:
    """Every way of removing ``total`` voters from groups of the given sizes."""
    if not counts:
        if total == 0:
            yield ()
        return
    head, rest = counts[0], counts[1:]
    capacity = sum(rest)
    for taken in range(min(head, total), -1, -1):
        if total - taken > capacity:
            break
        for tail in removal_vectors(rest, total - taken):
            yield (taken,) + tail


class YoungRule(BaseRule):
    """Extensions of m(Q) for the largest majority-consistent subprofiles Q."""

    rule_id = "young"

    def get_definition(self) -> RuleDefinition:
        return RuleDefinition(
            rule_id=self.rule_id,
            name="Young",
            family="repair",
            description="remove a minimal number of voters so that the majority is consistent",
        )

    def select(self, profile: Profile, config: AggregatorConfig) -> RuleOutcome:
        agenda = profile.agenda
        groups = profile.groups()
        counts = [count for _, count in groups]
        positions = profile.group_indices()

        for removed in range(profile.n):
            found = []
            for removal in removal_vectors(counts, removed):
                remaining = [
                    (voter, count - taken) for (voter, count), taken in zip(groups, removal)
                ]
                majority = majoritarian_from_counts(remaining, len(agenda))
                if agenda.is_consistent(majority):
                    found.append((removal, majority))
            logger.debug("young: %d removals, %d consistent subprofiles", removed, len(found))
            if found:
                break

        winners: Set[JudgmentSet] = set()
        witnesses = []
        for removal, majority in found:
            winners.update(agenda.extensions(majority))
            dropped = sorted(
                index
                for (voter, _), taken in zip(groups, removal)
                for index in positions[voter][:taken]
            )
            witnesses.append(
                {"removed_voters": [index + 1 for index in dropped], "majority": str(majority)}
            )
        return RuleOutcome(
            rule_id=self.rule_id,
            winners=list(winners),
            witnesses=witnesses,
            details={"removed": removed},
        )


@dataclass(slots=True)
class _Repair:
    cost: int
    majority: JudgmentSet
    replacements: List[List[JudgmentSet]]


@dataclass(slots=True)
class _RepairSearch:
    """Depth-first search over group-wise replacement multisets within a budget."""

    profile: Profile
    groups: List[Tuple[JudgmentSet, int]] = field(init=False)
    menus: List[List[Tuple[int, JudgmentSet]]] = field(init=False)
    nodes: int = 0

    def __post_init__(self) -> None:
        rational = self.profile.agenda.rational_sets
        self.groups = self.profile.groups()
        self.menus = [
            sorted(
                ((hamming(voter, candidate), candidate) for candidate in rational),
                key=lambda entry: (entry[0], entry[1].sort_key),
            )
            for voter, _ in self.groups
        ]

    def run(self, budget: int) -> List[_Repair]:
        size = len(self.profile.agenda)
        remaining_pos = [0] * size
        remaining_neg = [0] * size
        for voter, count in self.groups:
            for issue, sign in enumerate(voter.signs):
                if sign == POS:
                    remaining_pos[issue] += count
                else:
                    remaining_neg[issue] += count
        found: List[_Repair] = []
        self._group(0, budget, 0, [0] * size, remaining_pos, remaining_neg, [], found)
        return found

    def _lower_bound(
        self, committed_pos: List[int], remaining_pos: List[int], remaining_neg: List[int]
    ) -> float:
        """Reversals still needed before some rational set contains the majority."""
        n = self.profile.n
        half = n // 2
        best = math.inf
        committed_voters = n - (remaining_pos[0] + remaining_neg[0])
        for target in self.profile.agenda.rational_sets:
            need = 0
            for issue, sign in enumerate(target.signs):
                committed_neg = committed_voters - committed_pos[issue]
                if sign == POS:
                    movable = remaining_neg[issue]
                    excess = committed_neg + movable - half
                else:
                    movable = remaining_pos[issue]
                    excess = committed_pos[issue] + movable - half
                if excess > 0:
                    if excess > movable:
                        need = -1
                        break
                    need += excess
            if need >= 0 and need < best:
                best = need
                if best == 0:
                    break
        return best

    def _group(
        self,
        index: int,
        budget: int,
        spent: int,
        committed_pos: List[int],
        remaining_pos: List[int],
        remaining_neg: List[int],
        chosen: List[List[JudgmentSet]],
        found: List[_Repair],
    ) -> None:
        self.nodes += 1
        if spent + self._lower_bound(committed_pos, remaining_pos, remaining_neg) > budget:
            return
        if index == len(self.groups):
            counts = [(replacement, 1) for picks in chosen for replacement in picks]
            majority = majoritarian_from_counts(counts, len(committed_pos))
            if self.profile.agenda.is_consistent(majority):
                found.append(_Repair(spent, majority, [list(picks) for picks in chosen]))
            return

        voter, count = self.groups[index]
        next_pos = list(remaining_pos)
        next_neg = list(remaining_neg)
        for issue, sign in enumerate(voter.signs):
            if sign == POS:
                next_pos[issue] -= count
            else:
                next_neg[issue] -= count

        for picks, cost in self._multisets(self.menus[index], count, budget - spent):
            placed = list(committed_pos)
            for replacement in picks:
                for issue, sign in enumerate(replacement.signs):
                    if sign == POS:
                        placed[issue] += 1
            chosen.append(picks)
            self._group(
                index + 1, budget, spent + cost, placed, next_pos, next_neg, chosen, found
            )
            chosen.pop()

    def _multisets(
        self, menu: List[Tuple[int, JudgmentSet]], size: int, allowance: int
    ) -> Iterator[Tuple[List[JudgmentSet], int]]:
        """Multisets of ``size`` menu entries with total distance within ``allowance``."""

        def extend(start: int, left: int, cost: int, picks: List[JudgmentSet]):
            if left == 0:
                yield list(picks), cost
                return
            for position in range(start, len(menu)):
                distance, candidate = menu[position]
                if cost + distance > allowance:
                    break
                picks.append(candidate)
                yield from extend(position, left - 1, cost + distance, picks)
                picks.pop()

        yield from extend(0, size, 0, [])


class MinimalProfileChangeRule(BaseRule):
    """Extensions of m(Q) for the majority-consistent profiles Q closest to P."""

    rule_id = "mpc"

    def get_definition(self) -> RuleDefinition:
        return RuleDefinition(
            rule_id=self.rule_id,
            name="Minimal Profile Change",
            family="repair",
            description="reverse a minimal number of individual judgments to reach consistency",
        )

    def select(self, profile: Profile, config: AggregatorConfig) -> RuleOutcome:
        ceiling = config.budget("mpc_budget")
        search = _RepairSearch(profile)
        repairs: List[_Repair] = []
        budget = 0
        while not repairs:
            if budget > ceiling:
                raise BudgetExceededError("mpc_budget", ceiling, budget)
            repairs = search.run(budget)
            logger.debug(
                "mpc: budget %d, %d repairs, %d nodes explored", budget, len(repairs), search.nodes
            )
            if not repairs:
                budget += 1

        agenda = profile.agenda
        positions = profile.group_indices()
        winners: Set[JudgmentSet] = set()
        witnesses = []
        seen: Dict[JudgmentSet, bool] = {}
        for repair in repairs:
            winners.update(agenda.extensions(repair.majority))
            if repair.majority in seen:
                continue
            seen[repair.majority] = True
            witnesses.append(
                {
                    "majority": str(repair.majority),
                    "profile": [str(voter) for voter in _rebuild(profile, positions, repair)],
                    "distance": repair.cost,
                }
            )
        return RuleOutcome(
            rule_id=self.rule_id,
            winners=list(winners),
            witnesses=witnesses,
            details={"distance": budget},
        )


def _rebuild(
    profile: Profile, positions: Dict[JudgmentSet, List[int]], repair: _Repair
) -> List[JudgmentSet]:
    voters = list(profile.voters)
    for (voter, _), picks in zip(profile.groups(), repair.replacements):
        for index, replacement in zip(positions[voter], picks):
            voters[index] = replacement
    return voters


def repaired_profiles(profile: Profile, config: Optional[AggregatorConfig] = None) -> List[Profile]:
    """One closest majority-consistent profile per distinct majoritarian set."""
    outcome = MinimalProfileChangeRule().aggregate(profile, config)
    return [
        Profile.from_rows(profile.agenda, witness["profile"]) for witness in outcome.witnesses
    ]


def profiles_within(
    profile: Profile, radius: int, max_profiles: Optional[int] = None
) -> List[Tuple[Profile, int]]:
    """Every ordered profile at total Hamming distance at most ``radius`` from ``profile``."""
    limit = (
        AggregatorConfig().budget("max_profiles") if max_profiles is None else max_profiles
    )
    rational = profile.agenda.rational_sets
    menus = [
        sorted((hamming(voter, candidate), candidate.sort_key, candidate) for candidate in rational)
        for voter in profile.voters
    ]
    results: List[Tuple[Profile, int]] = []

    def extend(position: int, spent: int, voters: List[JudgmentSet]) -> None:
        if position == len(menus):
            if len(results) >= limit:
                raise BudgetExceededError("max_profiles", limit, len(results) + 1)
            results.append((Profile(profile.agenda, voters), spent))
            return
        for distance, _, candidate in menus[position]:
            if spent + distance > radius:
                break
            voters.append(candidate)
            extend(position + 1, spent + distance, voters)
            voters.pop()

    extend(0, 0, [])
    return results
