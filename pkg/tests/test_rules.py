from __future__ import annotations

from pathlib import Path

import pytest

from judgment_aggregator.agenda import Agenda
from judgment_aggregator.config import AggregatorConfig, BudgetExceededError
from judgment_aggregator.data_models import JudgmentSet
from judgment_aggregator.loaders import load_agenda, load_profile
from judgment_aggregator.logic import Atom
from judgment_aggregator.metrics.distances import (
    hamming,
    hamming_profiles,
    hamming_set_profile,
    profile_distance_table,
)
from judgment_aggregator.profile import Profile
from judgment_aggregator.rules.distance import DistanceRule, DistanceSpec, DistanceSpecError
from judgment_aggregator.rules.majority import leximax_levels, ranked_agenda_by_permutations
from judgment_aggregator.rules.registry import (
    MAIN_RULE_IDS,
    MAJORITY_PRESERVING_RULE_IDS,
    UnknownRuleError,
    get_rule,
)
from judgment_aggregator.rules.repair import removal_vectors, repaired_profiles

CORPUS = Path(__file__).resolve().parents[1] / "judgment_aggregator" / "samples" / "corpus"


def load_running_profile() -> Profile:
    return load_profile(CORPUS / "running-17.profile")


def load_constrained_agenda() -> Agenda:
    return load_agenda(CORPUS / "ex1-constrained.agenda")


def rows(rule_id: str, profile: Profile, config: AggregatorConfig | None = None):
    return get_rule(rule_id).aggregate(profile, config).rows()


def test_running_example_separates_the_majority_rules():
    profile = load_running_profile()
    assert rows("mc", profile) == ["+++++", "++--+", "--+-+"]
    assert rows("mcc", profile) == ["+++++", "++--+"]
    assert rows("med", profile) == ["+++++"]
    assert rows("ra", profile) == ["--+-+"]
    assert rows("leximax", profile) == ["--+-+"]
    assert rows("young", profile) == ["--+-+", "--+--"]
    assert rows("mpc", profile) == ["+++++"]


def test_running_example_scores_and_details():
    profile = load_running_profile()
    med = get_rule("med").aggregate(profile)
    assert med.scores == {JudgmentSet.from_text("+++++"): 49}
    young = get_rule("young").aggregate(profile)
    assert young.details["removed"] == 3
    assert all(len(witness["removed_voters"]) == 3 for witness in young.witnesses)
    mpc = get_rule("mpc").aggregate(profile)
    assert mpc.details["distance"] == 3
    assert all(witness["distance"] == 3 for witness in mpc.witnesses)
    leximax = get_rule("leximax").aggregate(profile)
    assert leximax.details["levels"] == list(range(17, 8, -1))


def test_ranked_agenda_procedure_matches_dominance_definition():
    profile = load_running_profile()
    procedural = [str(item) for item in ranked_agenda_by_permutations(profile)]
    assert procedural == rows("ra", profile)


def test_consistent_majority_is_returned_by_majority_preserving_rules():
    agenda = load_constrained_agenda()
    profile = Profile.from_rows(agenda, ["+++", "+++", "---"])
    for rule_id in MAJORITY_PRESERVING_RULE_IDS:
        assert rows(rule_id, profile) == ["+++"], rule_id
    assert get_rule("young").aggregate(profile).details["removed"] == 0
    assert get_rule("mpc").aggregate(profile).details["distance"] == 0


def test_max_distance_rule_can_miss_a_consistent_majority():
    agenda = load_constrained_agenda()
    profile = Profile.from_rows(agenda, ["+++", "+++", "---"])
    assert rows("dmax-hamming", profile) == ["+--", "-+-"]


def test_single_voter_is_selected_by_distance_and_scoring_rules():
    agenda = load_constrained_agenda()
    profile = Profile.from_rows(agenda, ["+--"])
    frev = get_rule("frev").aggregate(profile)
    assert frev.rows() == ["+--"]
    assert frev.scores[JudgmentSet.from_text("+--")] == 5
    assert rows("dsum-geodesic", profile) == ["+--"]
    assert rows("dsum-hamming", profile) == ["+--"]


def test_membership_scoring_is_the_median_rule():
    profile = load_running_profile()
    assert rows("score:median", profile) == rows("med", profile)


def test_registry_builds_parameterized_rules():
    assert get_rule("dist:geodesic:max").rule_id == "dist:geodesic:max"
    assert get_rule("score:rev").rule_id == "score:rev"
    assert len(MAIN_RULE_IDS) == 10
    for rule_id in MAIN_RULE_IDS:
        definition = get_rule(rule_id).get_definition()
        assert definition.rule_id == rule_id


@pytest.mark.parametrize("rule_id", ["borda", "dist:hamming", "dist:cosine:sum", "score:nope"])
def test_registry_rejects_unknown_rules(rule_id):
    with pytest.raises(UnknownRuleError):
        get_rule(rule_id)


def test_distance_table_rule_matches_hamming():
    agenda = Agenda([Atom("p"), Atom("q")])
    sets = agenda.rational_sets
    table = {(first, second): hamming(first, second) for first in sets for second in sets}
    profile = Profile.from_rows(agenda, ["++", "+-", "--"])
    rule = DistanceRule(DistanceSpec("table", "sum", table))
    assert rule.aggregate(profile).rows() == rows("dsum-hamming", profile)


def test_distance_table_must_be_symmetric():
    agenda = Agenda([Atom("p"), Atom("q")])
    sets = agenda.rational_sets
    table = {(first, second): hamming(first, second) for first in sets for second in sets}
    table[(sets[0], sets[1])] = 5
    profile = Profile.from_rows(agenda, ["++"])
    with pytest.raises(DistanceSpecError):
        DistanceRule(DistanceSpec("table", "sum", table)).aggregate(profile)
    with pytest.raises(DistanceSpecError):
        DistanceSpec("cosine")


def test_mpc_budget_is_enforced():
    profile = load_running_profile()
    config = AggregatorConfig().with_overrides(mpc_budget=1)
    with pytest.raises(BudgetExceededError) as excinfo:
        get_rule("mpc").aggregate(profile, config)
    assert excinfo.value.budget == "mpc_budget"


def test_leximax_levels_stop_at_half():
    assert list(leximax_levels(4)) == [4, 3, 2]
    assert list(leximax_levels(5)) == [5, 4, 3]


def test_removal_vectors_enumerate_group_removals():
    assert list(removal_vectors([2, 1], 2)) == [(2, 0), (1, 1)]
    assert list(removal_vectors([1], 0)) == [(0,)]


def test_profile_distance_table_lists_each_distinct_voter():
    agenda = load_constrained_agenda()
    profile = Profile.from_rows(agenda, ["+++", "---", "+++"])
    table = profile_distance_table(profile)
    assert table == {
        JudgmentSet.from_text("+++"): [0, 2, 2, 3],
        JudgmentSet.from_text("---"): [3, 1, 1, 0],
    }


def test_repaired_profile_lies_at_the_reported_distance():
    profile = load_running_profile()
    repaired = repaired_profiles(profile)
    assert len(repaired) == 1
    assert repaired[0].is_majority_consistent()
    assert str(repaired[0].majoritarian_set()) == "+++++"
    assert hamming_profiles(profile, repaired[0]) == 3


def test_median_score_complements_the_summed_distance():
    profile = load_running_profile()
    unanimous = JudgmentSet.from_text("+++++")
    assert hamming_set_profile(unanimous, profile) == 36
    assert profile.n * len(profile.agenda) - hamming_set_profile(unanimous, profile) == 49
