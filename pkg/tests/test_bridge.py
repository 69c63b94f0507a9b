from __future__ import annotations

from pathlib import Path

import pytest

from judgment_aggregator.agenda import AgendaError
from judgment_aggregator.bridge.correspondence import (
    CORRESPONDENCES,
    bridge_report,
    check_correspondences,
)
from judgment_aggregator.bridge.preferences import (
    PreferenceProfile,
    build_preference_agenda,
    decode_order,
    decode_winners,
    encode,
    encode_order,
    issue_pairs,
    nondominated,
)
from judgment_aggregator.bridge.voting import (
    all_orders,
    all_preference_profiles,
    borda_orders,
    borda_scores,
    condorcet_or_all,
    condorcet_winner,
    copeland_winners,
    kemeny_orders,
    maximin_winners,
    ranked_pairs_orders,
    top_cycle,
    young_winners,
)
from judgment_aggregator.config import BudgetExceededError
from judgment_aggregator.data_models import NEG, POS, JudgmentSet
from judgment_aggregator.loaders import FileFormatError, load_preferences, parse_preference_text
from judgment_aggregator.rules.registry import get_rule
from judgment_aggregator.rules.scoring import reversal_score

PREFERENCE_FILE = (
    Path(__file__).resolve().parents[1]
    / "judgment_aggregator"
    / "samples"
    / "corpus"
    / "pref-incomparable.prefs"
)

ABC = ("a", "b", "c")


def cyclic_profile() -> PreferenceProfile:
    return PreferenceProfile(ABC, (("a", "b", "c"), ("b", "c", "a"), ("c", "a", "b")))


def condorcet_profile() -> PreferenceProfile:
    return PreferenceProfile(ABC, (("a", "b", "c"), ("a", "c", "b"), ("b", "a", "c")))


def test_preference_agendas_count_their_rational_sets():
    assert len(build_preference_agenda(ABC, "Tr").rational_sets) == 6
    assert len(build_preference_agenda(ABC, "W").rational_sets) == 6
    assert len(build_preference_agenda(("a", "b", "c", "d"), "Tr").rational_sets) == 24
    assert len(build_preference_agenda(("a", "b", "c", "d"), "W").rational_sets) == 32


def test_preference_agenda_limits():
    with pytest.raises(BudgetExceededError):
        build_preference_agenda(tuple("abcdef"), "Tr")
    with pytest.raises(AgendaError):
        build_preference_agenda(ABC, "X")
    with pytest.raises(AgendaError):
        build_preference_agenda(("a",), "Tr")


def test_rankings_encode_and_decode():
    judgment = encode_order(("b", "a", "c"), ABC)
    assert str(judgment) == "-++"
    assert decode_order(judgment, ABC) == ("b", "a", "c")
    assert decode_order(JudgmentSet.from_text("+-+"), ABC) is None


def test_nondominated_alternatives():
    assert nondominated(JudgmentSet.from_text("++-"), ABC) == ["a"]
    assert nondominated(JudgmentSet.from_text("+-+"), ABC) == []
    winners = [JudgmentSet.from_text("++-"), JudgmentSet.from_text("--+")]
    assert decode_winners(winners, ABC) == ["a", "b"]


def test_encoded_profile_has_one_voter_per_ranking():
    agenda = build_preference_agenda(ABC, "Tr")
    profile = encode(condorcet_profile(), agenda)
    assert [str(voter) for voter in profile.voters] == ["+++", "++-", "-++"]
    assert str(profile.majoritarian_set()) == "+++"


def test_voting_rules_on_a_condorcet_cycle():
    preferences = cyclic_profile()
    assert condorcet_winner(preferences) is None
    assert condorcet_or_all(preferences) == list(ABC)
    assert copeland_winners(preferences) == list(ABC)
    assert top_cycle(preferences) == list(ABC)
    assert maximin_winners(preferences) == list(ABC)
    assert kemeny_orders(preferences) == [("a", "b", "c"), ("b", "c", "a"), ("c", "a", "b")]


def test_voting_rules_with_a_condorcet_winner():
    preferences = condorcet_profile()
    assert condorcet_winner(preferences) == "a"
    assert copeland_winners(preferences) == ["a"]
    assert top_cycle(preferences) == ["a"]
    assert young_winners(preferences) == ["a"]
    assert ranked_pairs_orders(preferences) == [("a", "b", "c")]
    assert kemeny_orders(preferences) == [("a", "b", "c")]
    assert borda_scores(preferences) == {"a": 5, "b": 3, "c": 1}


def test_median_rule_decodes_to_kemeny():
    preferences = cyclic_profile()
    agenda = build_preference_agenda(ABC, "Tr")
    outcome = get_rule("med").aggregate(encode(preferences, agenda))
    assert sorted(decode_order(winner, ABC) for winner in outcome.winners) == kemeny_orders(
        preferences
    )


@pytest.mark.parametrize("alternatives", [ABC, ("a", "b", "c", "d")])
def test_reversal_score_is_the_position_gap(alternatives):
    agenda = build_preference_agenda(alternatives, "Tr")
    pairs = issue_pairs(alternatives)
    for order in all_orders(alternatives):
        judgment = encode_order(order, alternatives)
        for issue, (first, second) in enumerate(pairs):
            gap = order.index(second) - order.index(first)
            sign = POS if gap > 0 else NEG
            assert reversal_score(agenda, judgment, (issue, sign)) == abs(gap)
            assert reversal_score(agenda, judgment, (issue, -sign)) == 0


def test_reversal_rule_decodes_to_borda():
    preferences = condorcet_profile()
    assert borda_orders(preferences) == [("a", "b", "c")]
    assert borda_orders(cyclic_profile()) == all_orders(ABC)
    agenda = build_preference_agenda(ABC, "Tr")
    outcome = get_rule("frev").aggregate(encode(preferences, agenda))
    assert [decode_order(winner, ABC) for winner in outcome.winners] == [("a", "b", "c")]


def test_correspondences_hold_on_three_voters():
    profiles = all_preference_profiles(ABC, 3, ordered=False)
    results = check_correspondences(profiles)
    assert len(results) == len(CORRESPONDENCES)
    for result in results:
        assert result.instances == 56
        assert result.passed, (result.rule_id, result.constraint, result.witness)


def test_bridge_report_lists_references_and_rules():
    report = bridge_report(load_preferences(PREFERENCE_FILE))
    assert report["alternatives"] == ["c1", "c2", "c3", "c4"]
    assert report["voters"] == 3
    assert set(report["references"]) >= {"kemeny", "slater", "copeland", "top-cycle"}
    assert len(report["correspondences"]) == len(CORRESPONDENCES)


def test_preference_file_format():
    preferences = parse_preference_text("alternatives: a b c\na > b > c x2\nc > b > a\n")
    assert preferences.n == 3
    assert preferences.pairwise("a", "c") == 2
    with pytest.raises(FileFormatError):
        parse_preference_text("alternatives: a b c\na > b\n")
    with pytest.raises(FileFormatError):
        parse_preference_text("a > b\n")
    with pytest.raises(ValueError):
        PreferenceProfile(ABC, (("a", "b"),))
