"""Core orchestrator for the Judgment Aggregator."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence

from .agenda import Agenda
from .axioms.compare import compare_rules
from .axioms.generators import InstanceGenerator
from .axioms.suite import (
    profile_instances,
    run_axiom_check,
    sampled_verdict,
    search_majority_violation,
    search_violation,
    validate_axiom,
)
from .bridge.correspondence import bridge_report, check_correspondences
from .bridge.preferences import PreferenceProfile
from .bridge.voting import all_preference_profiles
from .config import AggregatorConfig
from .corpus.fixtures import list_fixtures, load_fixture, run_fixture
from .data_models import (
    AgendaEnumeration,
    AxiomVerdict,
    CorrespondenceResult,
    FixtureResult,
    RelationReport,
    RuleOutcome,
)
from .loaders import load_agenda, load_preferences, load_profile
from .logic.formula import to_text
from .metrics.distances import profile_distance_table
from .profile import Profile
from .rules.registry import get_rule, get_rules

logger = logging.getLogger(__name__)

# Majority-preservation searches are exhaustive over small preference profiles.
_MAJORITY_AXIOMS = {"majority-preservation": "strict", "weak-majority-preservation": "weak"}


class JudgmentAggregator:
    """Main entry point: runs rules, axiom checks, comparisons, fixtures and the voting bridge."""

    def __init__(self, config: AggregatorConfig | None = None) -> None:
        self.config = config or AggregatorConfig()

    def _seed(self, seed: Optional[int]) -> int:
        return self.config.sampling["seed"] if seed is None else seed

    def _samples(self, samples: Optional[int]) -> int:
        return self.config.sampling["samples"] if samples is None else samples

    def load_profile(self, path: str | Path) -> Profile:
        return load_profile(path, config=self.config)

    def aggregate(self, profile: Profile, rule_ids: Sequence[str]) -> List[RuleOutcome]:
        """Apply every rule in ``rule_ids`` to ``profile``, in the given order."""
        rules = get_rules(list(rule_ids))
        outcomes = []
        for rule in rules:
            outcome = rule.aggregate(profile, self.config)
            logger.debug("%s: %d winners", rule.rule_id, len(outcome.winners))
            outcomes.append(outcome)
        return outcomes

    def check_axioms(
        self,
        rule_ids: Sequence[str],
        axioms: Sequence[str],
        samples: Optional[int] = None,
        seed: Optional[int] = None,
        fixture_id: Optional[str] = None,
        search: bool = False,
    ) -> List[AxiomVerdict]:
        """One verdict per (rule, axiom).

        With ``fixture_id`` the fixture's profiles are the instances; with ``search``
        preference agendas are searched for a witness (exhaustively over three-alternative
        profiles for majority-preservation, randomly otherwise); otherwise seeded random
        instances are sampled.
        """
        for axiom in axioms:
            validate_axiom(axiom)
        rules = get_rules(list(rule_ids))
        profiles: List[Profile] = []
        if fixture_id is not None:
            profiles = list(load_fixture(fixture_id, self.config).profiles.values())
        verdicts = []
        for rule in rules:
            for axiom in axioms:
                if fixture_id is not None:
                    instances = profile_instances(axiom, profiles)
                    verdict = run_axiom_check(rule, axiom, instances, self.config)
                    verdict.details["fixture"] = fixture_id
                elif search and axiom in _MAJORITY_AXIOMS:
                    verdict = search_majority_violation(
                        rule.rule_id, _MAJORITY_AXIOMS[axiom], config=self.config
                    )
                elif search:
                    verdict = search_violation(
                        rule.rule_id, axiom, self.config, self._samples(samples), self._seed(seed)
                    )
                else:
                    verdict = sampled_verdict(
                        rule, axiom, self.config, self._samples(samples), self._seed(seed)
                    )
                verdicts.append(verdict)
        return verdicts

    def comparison_profiles(
        self, samples: Optional[int] = None, seed: Optional[int] = None, corpus: bool = True
    ) -> Iterator[Profile]:
        """Corpus profiles (when ``corpus``) followed by seeded random instances."""
        if corpus:
            for fixture_id in list_fixtures():
                yield from load_fixture(fixture_id, self.config).profiles.values()
        generator = InstanceGenerator.from_config(self.config, self._seed(seed))
        for _ in range(self._samples(samples)):
            yield generator.random_instance()

    def compare(
        self,
        left: str,
        right: str,
        samples: Optional[int] = None,
        seed: Optional[int] = None,
        corpus: bool = True,
    ) -> RelationReport:
        profiles = self.comparison_profiles(samples, seed, corpus)
        return compare_rules(get_rule(left), get_rule(right), profiles, self.config)

    def run_fixtures(self, fixture_ids: Optional[Sequence[str]] = None) -> List[FixtureResult]:
        selected = list(fixture_ids) if fixture_ids else list_fixtures()
        return [run_fixture(fixture_id, self.config) for fixture_id in selected]

    def bridge_file(self, path: str | Path) -> Dict[str, object]:
        """Voting-rule outputs and decoded judgment outcomes for one preference file."""
        return self.bridge_profile(load_preferences(path))

    def bridge_profile(self, preferences: PreferenceProfile) -> Dict[str, object]:
        report = bridge_report(preferences, self.config)
        report["checks"] = check_correspondences([preferences], config=self.config)
        return report

    def bridge_sweep(self, alternatives: int = 3, voters: int = 3) -> List[CorrespondenceResult]:
        """Check every correspondence on every ordered profile of ``voters`` rankings."""
        names = tuple(f"x{index + 1}" for index in range(alternatives))
        profiles = all_preference_profiles(names, voters, ordered=True)
        return check_correspondences(profiles, config=self.config)

    def enumerate(self, agenda: Agenda, profile: Optional[Profile] = None) -> AgendaEnumeration:
        """Rational sets of ``agenda``; with a profile also N(P, .) and m(P)."""
        enumeration = AgendaEnumeration(
            agenda=agenda.name,
            issues=[to_text(issue) for issue in agenda.issues],
            rational=list(agenda.rational_sets),
        )
        if profile is not None:
            positives = profile.positive_counts()
            enumeration.voters = profile.n
            enumeration.support = [
                (text, count, profile.n - count)
                for text, count in zip(enumeration.issues, positives)
            ]
            enumeration.majority = profile.majoritarian_set()
            enumeration.majority_consistent = profile.is_majority_consistent()
            enumeration.distances = profile_distance_table(profile)
        return enumeration

    def load_agenda(self, path: str | Path) -> Agenda:
        return load_agenda(path, self.config)
