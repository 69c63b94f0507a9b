"""Seeded instance generators for the axiom and inclusion checks.

Identical seeds give identical instance streams: every random choice goes through
one ``random.Random`` owned by the generator.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

from ..agenda import Agenda, AgendaError
from ..bridge.preferences import PreferenceProfile
from ..config import AggregatorConfig
from ..data_models import NEG, POS, Element
from ..logic.formula import (
    TOP,
    And,
    Atom,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    is_satisfiable,
    is_tautology,
)
from ..profile import Profile
from .checkers import phi_improvements

_CONNECTIVES = (And, Or, Implies, Iff)
_MAX_ATTEMPTS = 200


@dataclass(slots=True)
class InstanceGenerator:
    """Random agendas and profiles within configured size ranges."""

    seed: int = 7
    min_issues: int = 2
    max_issues: int = 4
    atoms: Tuple[str, ...] = ("p", "q", "r", "s")
    min_voters: int = 1
    max_voters: int = 7
    constraint_probability: float = 0.5
    rng: random.Random = field(init=False, repr=False)
    _agendas: int = field(default=0, init=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.atoms) < 2:
            raise ValueError("Random agendas need at least two atoms")
        if not 1 <= self.min_issues <= self.max_issues:
            raise ValueError("Issue range must satisfy 1 <= min_issues <= max_issues")
        if not 1 <= self.min_voters <= self.max_voters:
            raise ValueError("Voter range must satisfy 1 <= min_voters <= max_voters")
        self.rng = random.Random(self.seed)

    @classmethod
    def from_config(
        cls, config: AggregatorConfig, seed: Optional[int] = None
    ) -> "InstanceGenerator":
        sampling = config.sampling
        return cls(
            seed=sampling["seed"] if seed is None else seed,
            min_issues=sampling["min_issues"],
            max_issues=sampling["max_issues"],
            atoms=tuple(sampling["atoms"]),
            min_voters=sampling["min_voters"],
            max_voters=sampling["max_voters"],
            constraint_probability=sampling["constraint_probability"],
        )

    def random_formula(self, names: Sequence[str], depth: int = 2) -> Formula:
        if depth == 0 or self.rng.random() < 0.4:
            atom = Atom(self.rng.choice(list(names)))
            return atom if self.rng.random() < 0.7 else Not(atom)
        connective = self.rng.choice(_CONNECTIVES)
        return connective(
            self.random_formula(names, depth - 1), self.random_formula(names, depth - 1)
        )

    def _random_issue(self, names: Sequence[str]) -> Optional[Formula]:
        formula = self.random_formula(names)
        while isinstance(formula, Not):
            formula = formula.operand
        if not is_satisfiable([formula]) or is_tautology(formula):
            return None
        return formula

    def random_agenda(self) -> Agenda:
        """An agenda over a random subset of the atoms, constrained with some probability."""
        while True:
            size = self.rng.randint(self.min_issues, self.max_issues)
            names = list(self.atoms[: self.rng.randint(2, len(self.atoms))])
            issues: List[Formula] = []
            for _ in range(_MAX_ATTEMPTS):
                if len(issues) == size:
                    break
                issue = self._random_issue(names)
                if issue is not None and issue not in issues:
                    issues.append(issue)
            if len(issues) < size:
                continue
            constraint: Formula = TOP
            if self.rng.random() < self.constraint_probability:
                constraint = self.random_formula(names)
            self._agendas += 1
            try:
                agenda = Agenda(issues, constraint=constraint, name=f"random-{self._agendas}")
                agenda.rational_sets
            except AgendaError:
                continue
            return agenda

    def random_profile(self, agenda: Agenda, n: Optional[int] = None) -> Profile:
        size = self.rng.randint(self.min_voters, self.max_voters) if n is None else n
        rational = agenda.rational_sets
        return Profile(agenda, [self.rng.choice(rational) for _ in range(size)])

    def random_instance(self) -> Profile:
        return self.random_profile(self.random_agenda())

    def majority_consistent_profile(self, agenda: Optional[Agenda] = None) -> Profile:
        """A profile whose majoritarian set is consistent.

        Random profiles are tried first; failing that, a strict majority of the voters
        is given one rational set.
        """
        agenda = agenda or self.random_agenda()
        for _ in range(20):
            profile = self.random_profile(agenda)
            if profile.is_majority_consistent():
                return profile
        size = self.rng.randint(self.min_voters, self.max_voters)
        anchor = self.rng.choice(agenda.rational_sets)
        majority = size // 2 + 1
        voters = [anchor] * majority + [
            self.rng.choice(agenda.rational_sets) for _ in range(size - majority)
        ]
        self.rng.shuffle(voters)
        return Profile(agenda, voters)

    def improvement_pair(self) -> Tuple[Profile, Element, Profile]:
        """A random profile together with one of its phi-improvements."""
        while True:
            profile = self.random_instance()
            candidates = [
                (element, improved)
                for element in _all_elements(profile.agenda)
                for _, improved in phi_improvements(profile, element)
            ]
            if candidates:
                element, improved = self.rng.choice(candidates)
                return profile, element, improved

    def profile_pair(self) -> Tuple[Profile, Profile]:
        agenda = self.random_agenda()
        return self.random_profile(agenda), self.random_profile(agenda)

    def random_preferences(self, alternatives: Sequence[str], n: int) -> PreferenceProfile:
        orders = []
        for _ in range(n):
            order = list(alternatives)
            self.rng.shuffle(order)
            orders.append(tuple(order))
        return PreferenceProfile(tuple(alternatives), tuple(orders))


def _all_elements(agenda: Agenda) -> List[Element]:
    return [(issue, sign) for issue in range(len(agenda)) for sign in (POS, NEG)]


def exhaustive_profiles(agenda: Agenda, n: int) -> Iterator[Profile]:
    """Every profile of ``n`` voters up to voter order."""
    for voters in itertools.combinations_with_replacement(agenda.rational_sets, n):
        yield Profile(agenda, voters)
