from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from judgment_aggregator.axioms import InstanceGenerator, classify_improvement
from judgment_aggregator.axioms.checkers import NEGATION_DROPPED, NEGATION_REPLACED, UNCHANGED
from judgment_aggregator.profile import Profile
from judgment_aggregator.rules.majority import ranked_agenda_by_permutations
from judgment_aggregator.rules.registry import (
    MAIN_RULE_IDS,
    MAJORITY_PRESERVING_RULE_IDS,
    get_rule,
)

seeds = st.integers(min_value=0, max_value=100_000)


def winners(rule_id: str, profile: Profile):
    return get_rule(rule_id).aggregate(profile).winner_set


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_majority_preserving_rules_return_extensions_of_a_consistent_majority(seed):
    generator = InstanceGenerator(seed=seed)
    profile = generator.majority_consistent_profile()
    expected = set(profile.agenda.extensions(profile.majoritarian_set()))
    for rule_id in MAJORITY_PRESERVING_RULE_IDS:
        assert winners(rule_id, profile) == expected, rule_id


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_maxcard_winners_are_maximal_consistent_winners(seed):
    profile = InstanceGenerator(seed=seed).random_instance()
    assert winners("mcc", profile) <= winners("mc", profile)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_median_is_hamming_sum(seed):
    profile = InstanceGenerator(seed=seed).random_instance()
    assert winners("med", profile) == winners("dsum-hamming", profile)


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_rules_ignore_voter_order(seed):
    profile = InstanceGenerator(seed=seed).random_instance()
    reversed_profile = Profile(profile.agenda, reversed(profile.voters))
    # mpc may exhaust its change budget on arbitrary profiles
    for rule_id in (rule for rule in MAIN_RULE_IDS if rule != "mpc"):
        assert winners(rule_id, profile) == winners(rule_id, reversed_profile), rule_id


@settings(max_examples=25, deadline=None)
@given(seeds, st.integers(min_value=2, max_value=3))
def test_scoring_rules_are_homogeneous(seed, factor):
    profile = InstanceGenerator(seed=seed).random_instance()
    for rule_id in ("med", "frev", "dsum-geodesic"):
        assert winners(rule_id, profile) == winners(rule_id, profile.replicate(factor)), rule_id


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_median_and_ranked_agenda_winners_are_maximal_consistent_winners(seed):
    profile = InstanceGenerator(seed=seed).random_instance()
    maximal = winners("mc", profile)
    assert winners("med", profile) <= maximal
    assert winners("ra", profile) <= maximal


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_leximax_refines_ranked_agenda(seed):
    profile = InstanceGenerator(seed=seed).random_instance()
    assert winners("leximax", profile) <= winners("ra", profile)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_ranked_agenda_dominance_matches_tie_permutations(seed):
    profile = InstanceGenerator(seed=seed).random_instance()
    assert winners("ra", profile) == set(ranked_agenda_by_permutations(profile))


def test_improvements_move_the_majoritarian_set_in_exactly_one_way():
    generator = InstanceGenerator(seed=2024)
    seen = set()
    for _ in range(2000):
        before, element, after = generator.improvement_pair()
        relations = classify_improvement(before, after, element)
        assert len(relations) == 1, (str(before), element, str(after))
        seen.update(relations)
    assert seen == {UNCHANGED, NEGATION_DROPPED, NEGATION_REPLACED}
