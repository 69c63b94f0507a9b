"""Profiles of rational judgment sets and their majoritarian aggregate."""

from __future__ import annotations

from collections import Counter
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from .agenda import Agenda
from .data_models import NEG, POS, UNDECIDED, Element, JudgmentSet


class ProfileError(ValueError):
    """Raised when a profile is empty or holds a set that is not rational."""


class Profile:
    """Ordered sequence of complete rational judgment sets over one agenda."""

    __slots__ = ("agenda", "voters")

    def __init__(self, agenda: Agenda, voters: Iterable[JudgmentSet]) -> None:
        self.agenda = agenda
        self.voters: Tuple[JudgmentSet, ...] = tuple(voters)
        if not self.voters:
            raise ProfileError("A profile needs at least one voter")
        for position, voter in enumerate(self.voters):
            if len(voter) != len(agenda) or not agenda.is_rational(voter):
                raise ProfileError(f"Voter {position + 1} holds a non-rational set {voter}")

    @classmethod
    def from_counts(cls, agenda: Agenda, rows: Iterable[Tuple[JudgmentSet, int]]) -> "Profile":
        voters: List[JudgmentSet] = []
        for judgment, count in rows:
            voters.extend([judgment] * count)
        return cls(agenda, voters)

    @classmethod
    def from_rows(cls, agenda: Agenda, rows: Iterable[str]) -> "Profile":
        return cls(agenda, (JudgmentSet.from_text(row) for row in rows))

    def __len__(self) -> int:
        return len(self.voters)

    def __iter__(self) -> Iterator[JudgmentSet]:
        return iter(self.voters)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Profile):
            return NotImplemented
        return self.agenda is other.agenda and self.voters == other.voters

    def __hash__(self) -> int:
        return hash((id(self.agenda), self.voters))

    def __repr__(self) -> str:
        return f"Profile({', '.join(str(voter) for voter in self.voters)})"

    def __add__(self, other: "Profile") -> "Profile":
        if other.agenda is not self.agenda:
            raise ProfileError("Cannot join profiles over different agendas")
        return Profile(self.agenda, self.voters + other.voters)

    def __rmul__(self, factor: int) -> "Profile":
        return self.replicate(factor)

    @property
    def n(self) -> int:
        return len(self.voters)

    def replicate(self, factor: int) -> "Profile":
        """The profile kP: ``factor`` copies of every voter, in order."""
        if factor < 1:
            raise ProfileError("Replication factor must be at least 1")
        return Profile(self.agenda, self.voters * factor)

    def subprofile(self, indices: Iterable[int]) -> "Profile":
        return Profile(self.agenda, (self.voters[index] for index in sorted(set(indices))))

    def without(self, indices: Iterable[int]) -> "Profile":
        removed = set(indices)
        return Profile(
            self.agenda, (voter for index, voter in enumerate(self.voters) if index not in removed)
        )

    def replace(self, index: int, judgment: JudgmentSet) -> "Profile":
        voters = list(self.voters)
        voters[index] = judgment
        return Profile(self.agenda, voters)

    def counts(self) -> Counter:
        return Counter(self.voters)

    def groups(self) -> List[Tuple[JudgmentSet, int]]:
        """Distinct voter sets with multiplicities, in order of first appearance."""
        counts = self.counts()
        seen: Dict[JudgmentSet, int] = {}
        for voter in self.voters:
            seen.setdefault(voter, counts[voter])
        return list(seen.items())

    def group_indices(self) -> Dict[JudgmentSet, List[int]]:
        indices: Dict[JudgmentSet, List[int]] = {}
        for index, voter in enumerate(self.voters):
            indices.setdefault(voter, []).append(index)
        return indices

    def positive_counts(self) -> List[int]:
        """N(P, issue) for every issue, in agenda order."""
        totals = [0] * len(self.agenda)
        for voter in self.voters:
            for issue, sign in enumerate(voter.signs):
                if sign == POS:
                    totals[issue] += 1
        return totals

    def support_count(self, element: Element) -> int:
        """Number of voters whose set contains ``element``."""
        issue, sign = element
        if not 0 <= issue < len(self.agenda) or sign not in (POS, NEG):
            raise ProfileError(f"({issue}, {sign}) is not an element of the agenda")
        return sum(1 for voter in self.voters if voter.signs[issue] == sign)

    def support_table(self) -> Dict[Element, int]:
        positives = self.positive_counts()
        table: Dict[Element, int] = {}
        for issue, count in enumerate(positives):
            table[(issue, POS)] = count
            table[(issue, NEG)] = self.n - count
        return table

    def majoritarian_set(self) -> JudgmentSet:
        """Elements with strict-majority support; ties leave the issue undecided."""
        signs = []
        for count in self.positive_counts():
            if 2 * count > self.n:
                signs.append(POS)
            elif 2 * count < self.n:
                signs.append(NEG)
            else:
                signs.append(UNDECIDED)
        return JudgmentSet(tuple(signs))

    def is_majority_consistent(self) -> bool:
        return self.agenda.is_consistent(self.majoritarian_set())


def majoritarian_from_counts(
    groups: Sequence[Tuple[JudgmentSet, int]], size: int
) -> JudgmentSet:
    """Majoritarian set of a profile given as (set, multiplicity) pairs."""
    total = sum(count for _, count in groups)
    positives = [0] * size
    for judgment, count in groups:
        if count:
            for issue, sign in enumerate(judgment.signs):
                if sign == POS:
                    positives[issue] += count
    signs = []
    for count in positives:
        if 2 * count > total:
            signs.append(POS)
        elif 2 * count < total:
            signs.append(NEG)
        else:
            signs.append(UNDECIDED)
    return JudgmentSet(tuple(signs))
