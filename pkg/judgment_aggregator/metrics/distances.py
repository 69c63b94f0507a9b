"""Distances between judgment sets and profiles."""

from __future__ import annotations

from collections import deque
from typing import TYPE_CHECKING, Dict, List, Sequence

from ..data_models import POS, JudgmentSet

if TYPE_CHECKING:
    from ..agenda import Agenda
    from ..profile import Profile


def hamming(first: JudgmentSet, second: JudgmentSet) -> int:
    """Number of issues on which two complete judgment sets differ."""
    if not first.is_complete or not second.is_complete:
        raise ValueError("Hamming distance needs complete judgment sets")
    if len(first) != len(second):
        raise ValueError("Judgment sets belong to different agendas")
    return sum(1 for left, right in zip(first.signs, second.signs) if left != right)


def hamming_profiles(first: "Profile", second: "Profile") -> int:
    """Sum of voter-wise Hamming distances between two profiles of equal size."""
    if len(first) != len(second):
        raise ValueError("Profiles have different numbers of voters")
    return sum(hamming(left, right) for left, right in zip(first.voters, second.voters))


def hamming_set_profile(judgment: JudgmentSet, profile: "Profile") -> int:
    return sum(hamming(judgment, voter) for voter in profile.voters)


def profile_distance_table(profile: "Profile") -> Dict[JudgmentSet, List[int]]:
    """Hamming distance from every distinct voter set to each rational set, in agenda order."""
    rational = profile.agenda.rational_sets
    return {
        voter: [hamming(voter, candidate) for candidate in rational]
        for voter, _ in profile.groups()
    }


def to_mask(judgment: JudgmentSet) -> int:
    """Bitmask of the accepted issues of a complete judgment set."""
    mask = 0
    for issue, sign in enumerate(judgment.signs):
        if sign == POS:
            mask |= 1 << issue
    return mask


def betweenness_graph(sets: Sequence[JudgmentSet]) -> List[List[int]]:
    """Adjacency lists: two sets are adjacent when no third set lies between them.

    A set lies between two others when it agrees with them wherever they agree.
    """
    if not sets:
        return []
    full = (1 << len(sets[0])) - 1
    masks = [to_mask(judgment) for judgment in sets]
    adjacency: List[List[int]] = [[] for _ in sets]
    for first in range(len(masks)):
        for second in range(first + 1, len(masks)):
            agree = full & ~(masks[first] ^ masks[second])
            between = any(
                (masks[third] ^ masks[first]) & agree == 0
                for third in range(len(masks))
                if third != first and third != second
            )
            if not between:
                adjacency[first].append(second)
                adjacency[second].append(first)
    return adjacency


def shortest_paths(adjacency: List[List[int]]) -> List[List[int]]:
    """All-pairs BFS path lengths; -1 marks unreachable pairs."""
    table: List[List[int]] = []
    for source in range(len(adjacency)):
        lengths = [-1] * len(adjacency)
        lengths[source] = 0
        queue = deque([source])
        while queue:
            node = queue.popleft()
            for neighbour in adjacency[node]:
                if lengths[neighbour] < 0:
                    lengths[neighbour] = lengths[node] + 1
                    queue.append(neighbour)
        table.append(lengths)
    return table


def geodesic_distance(agenda: "Agenda", first: JudgmentSet, second: JudgmentSet) -> int:
    """Length of the shortest path between two rational sets in the betweenness graph."""
    index = agenda.index_of
    try:
        return agenda.geodesic_table[index[first]][index[second]]
    except KeyError as exc:
        raise ValueError(f"Judgment set {exc.args[0]} is not rational for this agenda") from exc
