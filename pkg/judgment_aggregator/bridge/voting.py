"""Reference voting rules, computed by brute force over rankings and alternatives.

These are written directly on preference profiles. Apart from the removal-vector
enumeration reused for Young, they share no code with the judgment aggregation rules,
so they can serve as independent oracles.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from ..config import DEFAULT_BUDGETS, BudgetExceededError
from ..rules.repair import removal_vectors
from .preferences import Order, PreferenceProfile


def _check_size(preferences: PreferenceProfile, max_alternatives: Optional[int]) -> None:
    limit = DEFAULT_BUDGETS["max_alternatives"] if max_alternatives is None else max_alternatives
    if len(preferences.alternatives) > limit:
        raise BudgetExceededError("max_alternatives", limit, len(preferences.alternatives))


def all_orders(alternatives: Sequence[str]) -> List[Order]:
    return [tuple(order) for order in itertools.permutations(alternatives)]


def all_preference_profiles(
    alternatives: Sequence[str], n: int, ordered: bool = True
) -> Iterator[PreferenceProfile]:
    """Every profile of ``n`` rankings; ``ordered=False`` skips voter permutations."""
    orders = all_orders(alternatives)
    if ordered:
        rows = itertools.product(orders, repeat=n)
    else:
        rows = itertools.combinations_with_replacement(orders, n)
    for row in rows:
        yield PreferenceProfile(tuple(alternatives), tuple(row))


def _ordered_pairs(order: Order) -> Iterator[Tuple[str, str]]:
    return itertools.combinations(order, 2)


def beats_majority(margins: Dict[Tuple[str, str], int], first: str, second: str) -> bool:
    return margins[(first, second)] > margins[(second, first)]


def kemeny_orders(
    preferences: PreferenceProfile, max_alternatives: Optional[int] = None
) -> List[Order]:
    """Rankings with the largest total pairwise agreement with the voters."""
    _check_size(preferences, max_alternatives)
    margins = preferences.majority_margins()
    scores = {
        order: sum(margins[pair] for pair in _ordered_pairs(order))
        for order in all_orders(preferences.alternatives)
    }
    best = max(scores.values())
    return sorted(order for order, score in scores.items() if score == best)


def slater_orders(
    preferences: PreferenceProfile, max_alternatives: Optional[int] = None
) -> List[Order]:
    """Rankings reversing the fewest strict majority comparisons."""
    _check_size(preferences, max_alternatives)
    margins = preferences.majority_margins()
    scores = {
        order: sum(1 for x, y in _ordered_pairs(order) if beats_majority(margins, y, x))
        for order in all_orders(preferences.alternatives)
    }
    best = min(scores.values())
    return sorted(order for order, score in scores.items() if score == best)


def slater_winners(preferences: PreferenceProfile) -> List[str]:
    tops = {order[0] for order in slater_orders(preferences)}
    return [x for x in preferences.alternatives if x in tops]


def copeland_scores(preferences: PreferenceProfile) -> Dict[str, int]:
    """Pairwise majority wins minus pairwise majority losses."""
    margins = preferences.majority_margins()
    alternatives = preferences.alternatives
    return {
        x: sum(1 for y in alternatives if y != x and beats_majority(margins, x, y))
        - sum(1 for y in alternatives if y != x and beats_majority(margins, y, x))
        for x in alternatives
    }


def copeland_winners(preferences: PreferenceProfile) -> List[str]:
    scores = copeland_scores(preferences)
    best = max(scores.values())
    return [x for x in preferences.alternatives if scores[x] == best]


def top_cycle(preferences: PreferenceProfile) -> List[str]:
    """Alternatives reaching every other one through weak majority comparisons."""
    margins = preferences.majority_margins()
    alternatives = preferences.alternatives
    graph = {
        x: {y for y in alternatives if y != x and not beats_majority(margins, y, x)}
        for x in alternatives
    }
    winners = []
    for source in alternatives:
        reached = {source}
        frontier = [source]
        while frontier:
            node = frontier.pop()
            for target in graph[node] - reached:
                reached.add(target)
                frontier.append(target)
        if len(reached) == len(alternatives):
            winners.append(source)
    return winners


def condorcet_winner(preferences: PreferenceProfile) -> Optional[str]:
    margins = preferences.majority_margins()
    for x in preferences.alternatives:
        if all(beats_majority(margins, x, y) for y in preferences.alternatives if y != x):
            return x
    return None


def condorcet_or_all(preferences: PreferenceProfile) -> List[str]:
    winner = condorcet_winner(preferences)
    return [winner] if winner is not None else list(preferences.alternatives)


def _reaches(graph: Dict[str, Set[str]], source: str, target: str) -> bool:
    seen = {source}
    frontier = [source]
    while frontier:
        node = frontier.pop()
        if node == target:
            return True
        for following in graph[node] - seen:
            seen.add(following)
            frontier.append(following)
    return False


def _linear_extensions(graph: Dict[str, Set[str]], alternatives: Sequence[str]) -> List[Order]:
    return [
        order
        for order in all_orders(alternatives)
        if all(order.index(x) < order.index(y) for x in graph for y in graph[x])
    ]


def ranked_pairs_orders(
    preferences: PreferenceProfile, max_group: int = 8, max_alternatives: Optional[int] = None
) -> List[Order]:
    """Rankings produced by ranked pairs under every tie-breaking of equally strong pairs.

    Majority pairs are locked from the strongest down unless they close a cycle; pairs
    of equal strength are tried in every order. Tied comparisons are never locked, and
    every ranking extending the locked relation is returned.
    """
    _check_size(preferences, max_alternatives)
    margins = preferences.majority_margins()
    alternatives = preferences.alternatives
    strengths: Dict[int, List[Tuple[str, str]]] = {}
    for x, y in itertools.permutations(alternatives, 2):
        if beats_majority(margins, x, y):
            strengths.setdefault(margins[(x, y)], []).append((x, y))

    locked_states: Set[frozenset] = {frozenset()}
    for strength in sorted(strengths, reverse=True):
        group = sorted(strengths[strength])
        if len(group) > max_group:
            raise BudgetExceededError("ra_tie_group", max_group, len(group))
        next_states: Set[frozenset] = set()
        for locked in locked_states:
            for order in itertools.permutations(group):
                graph: Dict[str, Set[str]] = {x: set() for x in alternatives}
                for x, y in locked:
                    graph[x].add(y)
                for x, y in order:
                    if not _reaches(graph, y, x):
                        graph[x].add(y)
                next_states.add(frozenset((x, y) for x in graph for y in graph[x]))
        locked_states = next_states

    found: Set[Order] = set()
    for locked in locked_states:
        graph = {x: set() for x in alternatives}
        for x, y in locked:
            graph[x].add(y)
        found.update(_linear_extensions(graph, alternatives))
    return sorted(found)


def maximin_winners(preferences: PreferenceProfile) -> List[str]:
    """Alternatives whose weakest pairwise support is the largest."""
    margins = preferences.majority_margins()
    alternatives = preferences.alternatives
    worst = {x: min(margins[(x, y)] for y in alternatives if y != x) for x in alternatives}
    best = max(worst.values())
    return [x for x in alternatives if worst[x] == best]


def weak_condorcet_winners(
    alternatives: Sequence[str], groups: Sequence[Tuple[Order, int]]
) -> List[str]:
    """Alternatives not beaten by a strict majority of the weighted rankings."""

    def support(x: str, y: str) -> int:
        return sum(count for order, count in groups if order.index(x) < order.index(y))

    return [
        x
        for x in alternatives
        if all(support(x, y) >= support(y, x) for y in alternatives if y != x)
    ]


def young_winners(preferences: PreferenceProfile) -> List[str]:
    """Alternatives made weak Condorcet winners by removing the fewest voters."""
    groups = list(Counter(preferences.orders).items())
    counts = [count for _, count in groups]
    for removed in range(preferences.n):
        winners: Set[str] = set()
        for removal in removal_vectors(counts, removed):
            remaining = [(order, count - taken) for (order, count), taken in zip(groups, removal)]
            winners.update(weak_condorcet_winners(preferences.alternatives, remaining))
        if winners:
            return [x for x in preferences.alternatives if x in winners]
    return list(preferences.alternatives)


def borda_scores(preferences: PreferenceProfile) -> Dict[str, int]:
    """Points per alternative: q - 1 for a first place down to 0 for a last place."""
    size = len(preferences.alternatives)
    scores = {x: 0 for x in preferences.alternatives}
    for order in preferences.orders:
        for position, x in enumerate(order):
            scores[x] += size - 1 - position
    return scores


def borda_orders(preferences: PreferenceProfile) -> List[Order]:
    """Rankings listing the alternatives by non-increasing Borda score."""
    scores = borda_scores(preferences)
    return [
        order
        for order in all_orders(preferences.alternatives)
        if all(scores[first] >= scores[second] for first, second in zip(order, order[1:]))
    ]
