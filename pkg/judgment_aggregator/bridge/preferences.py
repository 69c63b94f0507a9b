"""Preference agendas: pairwise comparisons under transitivity or a nondominated alternative."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from ..agenda import Agenda, AgendaError
from ..config import DEFAULT_BUDGETS, BudgetExceededError
from ..data_models import NEG, POS, JudgmentSet, RuleOutcome
from ..logic.formula import And, Atom, Formula, Implies, conjunction, disjunction, negate
from ..profile import Profile

CONSTRAINTS = ("Tr", "W")

Order = Tuple[str, ...]


@dataclass(frozen=True, slots=True)
class PreferenceProfile:
    """Alternatives plus one strict ranking (best first) per voter."""

    alternatives: Tuple[str, ...]
    orders: Tuple[Order, ...]

    def __post_init__(self) -> None:
        if len(self.alternatives) < 2 or len(set(self.alternatives)) != len(self.alternatives):
            raise ValueError("A preference profile needs at least two distinct alternatives")
        if not self.orders:
            raise ValueError("A preference profile needs at least one voter")
        expected = sorted(self.alternatives)
        for order in self.orders:
            if sorted(order) != expected:
                raise ValueError(f"{' > '.join(order)} is not a ranking of the alternatives")

    @property
    def n(self) -> int:
        return len(self.orders)

    def pairwise(self, first: str, second: str) -> int:
        """Number of voters ranking ``first`` above ``second``."""
        return sum(1 for order in self.orders if order.index(first) < order.index(second))

    def majority_margins(self) -> Dict[Tuple[str, str], int]:
        return {
            (first, second): self.pairwise(first, second)
            for first, second in itertools.permutations(self.alternatives, 2)
        }


def issue_pairs(alternatives: Sequence[str]) -> List[Tuple[str, str]]:
    """Issue order of a preference agenda: (x_i, x_j) for i < j."""
    return list(itertools.combinations(alternatives, 2))


def _atom_name(first: str, second: str) -> str:
    return f"{first}P{second}"


def _prefers(first: str, second: str, position: Dict[str, int]) -> Formula:
    if position[first] < position[second]:
        return Atom(_atom_name(first, second))
    return negate(Atom(_atom_name(second, first)))


def transitivity_constraint(alternatives: Sequence[str]) -> Formula:
    position = {name: index for index, name in enumerate(alternatives)}
    return conjunction(
        Implies(And(_prefers(x, y, position), _prefers(y, z, position)), _prefers(x, z, position))
        for x, y, z in itertools.permutations(alternatives, 3)
    )


def nondominated_constraint(alternatives: Sequence[str]) -> Formula:
    position = {name: index for index, name in enumerate(alternatives)}
    return disjunction(
        conjunction(_prefers(x, y, position) for y in alternatives if y != x)
        for x in alternatives
    )


def build_preference_agenda(
    alternatives: Sequence[str], constraint: str = "Tr", max_alternatives: Optional[int] = None
) -> Agenda:
    """Agenda of pairwise comparisons constrained by Tr (transitivity) or W."""
    limit = DEFAULT_BUDGETS["max_alternatives"] if max_alternatives is None else max_alternatives
    if len(alternatives) > limit:
        raise BudgetExceededError("max_alternatives", limit, len(alternatives))
    if len(alternatives) < 2 or len(set(alternatives)) != len(alternatives):
        raise AgendaError("A preference agenda needs at least two distinct alternatives")
    if constraint not in CONSTRAINTS:
        raise AgendaError(f"Unknown preference constraint '{constraint}'")
    issues = [Atom(_atom_name(first, second)) for first, second in issue_pairs(alternatives)]
    formula: Formula
    if constraint == "Tr":
        formula = transitivity_constraint(alternatives)
    else:
        formula = nondominated_constraint(alternatives)
    return Agenda(issues, constraint=formula, name=f"{constraint}:{' '.join(alternatives)}")


def encode_order(order: Order, alternatives: Sequence[str]) -> JudgmentSet:
    rank = {name: index for index, name in enumerate(order)}
    return JudgmentSet(
        tuple(
            POS if rank[first] < rank[second] else NEG
            for first, second in issue_pairs(alternatives)
        )
    )


def encode(preferences: PreferenceProfile, agenda: Agenda) -> Profile:
    """Judgment profile whose voter i accepts xPy exactly when x is ranked above y."""
    alternatives = preferences.alternatives
    return Profile(agenda, (encode_order(order, alternatives) for order in preferences.orders))


def beats(judgment: JudgmentSet, alternatives: Sequence[str]) -> Set[Tuple[str, str]]:
    """Ordered pairs (x, y) with xPy held by ``judgment``."""
    relation = set()
    for (first, second), sign in zip(issue_pairs(alternatives), judgment.signs):
        if sign == POS:
            relation.add((first, second))
        elif sign == NEG:
            relation.add((second, first))
    return relation


def nondominated(judgment: JudgmentSet, alternatives: Sequence[str]) -> List[str]:
    relation = beats(judgment, alternatives)
    return [
        x for x in alternatives if all((x, y) in relation for y in alternatives if y != x)
    ]


def decode_order(judgment: JudgmentSet, alternatives: Sequence[str]) -> Optional[Order]:
    """The ranking encoded by ``judgment``, or None when it is not transitive."""
    relation = beats(judgment, alternatives)
    wins = {x: sum(1 for y in alternatives if (x, y) in relation) for x in alternatives}
    order = tuple(sorted(alternatives, key=lambda x: -wins[x]))
    if encode_order(order, alternatives) != judgment:
        return None
    return order


def decode_winners(
    outcome: RuleOutcome | Iterable[JudgmentSet], alternatives: Sequence[str]
) -> List[str]:
    """Alternatives that are nondominated in at least one winning judgment set."""
    winners = outcome.winners if isinstance(outcome, RuleOutcome) else list(outcome)
    found = set()
    for judgment in winners:
        found.update(nondominated(judgment, alternatives))
    return [x for x in alternatives if x in found]


def decode_orders(
    outcome: RuleOutcome | Iterable[JudgmentSet], alternatives: Sequence[str]
) -> List[Order]:
    winners = outcome.winners if isinstance(outcome, RuleOutcome) else list(outcome)
    orders = [decode_order(judgment, alternatives) for judgment in winners]
    return sorted(order for order in orders if order is not None)
