from __future__ import annotations

import pytest

from judgment_aggregator.axioms import check_reinforcement, check_unanimity
from judgment_aggregator.bridge.preferences import decode_order
from judgment_aggregator.corpus import (
    CORPUS_DIRECTORY,
    FIXTURES,
    UnknownFixtureError,
    get_fixture,
    list_fixtures,
    load_fixture,
    run_fixture,
)
from judgment_aggregator.rules.registry import get_rule


def test_corpus_ships_seventeen_fixtures_with_their_files():
    assert len(list_fixtures()) == 17
    assert len(set(list_fixtures())) == 17
    for fixture in FIXTURES:
        assert fixture.expectations, fixture.fixture_id
        for filename in [*fixture.profiles.values(), *fixture.preferences.values()]:
            assert (CORPUS_DIRECTORY / filename).is_file(), filename


@pytest.mark.parametrize("fixture_id", list_fixtures())
def test_fixture_replays_without_diffs(fixture_id):
    result = run_fixture(fixture_id)
    assert result.fixture_id == fixture_id
    assert result.diffs == [], [
        (diff.label, diff.expected, diff.actual) for diff in result.diffs
    ]
    assert result.passed


def test_fixture_context_loads_named_profiles():
    context = load_fixture("dmax-not-mp")
    assert set(context.profiles) == {"strict", "weak"}
    assert context.profile("weak").n == 5
    assert context.rows("dmax-hamming", "weak") == ["+-"]


def test_preference_fixture_is_encoded_on_the_transitive_agenda():
    context = load_fixture("pref-incomparable")
    assert context.preferences["P"].alternatives == ("c1", "c2", "c3", "c4")
    assert len(context.agenda) == 6
    assert len(context.agenda.rational_sets) == 24


def test_extensional_fixture_labels_winners():
    context = load_fixture("dgsum-unanimity")
    assert context.labels("dsum-geodesic") == ["J7"]
    assert context.named("J7") in context.outcome("dsum-geodesic").winners


def test_unknown_fixture():
    with pytest.raises(UnknownFixtureError) as excinfo:
        get_fixture("table-99")
    assert str(excinfo.value) == "Unknown fixture 'table-99'"
    with pytest.raises(UnknownFixtureError):
        run_fixture("table-99")


def test_joined_electorates_lose_the_common_ranked_agenda_winner():
    context = load_fixture("ra-reinforcement")
    first, second = context.profile(), context.profile("Q")
    assert first.agenda is second.agenda
    assert (first.n, second.n) == (28, 28)
    for rule_id in ("ra", "leximax"):
        verdict = check_reinforcement(get_rule(rule_id), first, second)
        assert verdict.violated, rule_id
        assert verdict.witness["winners"] == verdict.witness["second_winners"] == ["++++++"]
        assert "++++++" not in verdict.witness["joined_winners"]
    joined = get_rule("ra").aggregate(first + second).winners
    assert sorted(decode_order(winner, ("a", "b", "c", "d")) for winner in joined) == [
        ("b", "c", "d", "a"),
        ("b", "d", "a", "c"),
        ("c", "d", "a", "b"),
        ("d", "a", "b", "c"),
    ]


def test_minimal_profile_change_breaks_reinforcement_with_itself():
    profile = load_fixture("mpc-homogeneity").profile()
    verdict = check_reinforcement(get_rule("mpc"), profile, profile)
    assert verdict.violated
    assert verdict.witness["winners"] == ["++--", "--+-"]
    assert verdict.witness["joined_winners"] == ["--+-"]


def test_max_hamming_rejects_the_unanimous_agreement_issue():
    profile = load_fixture("dmax-unanimity").profile()
    verdict = check_unanimity(get_rule("dmax-hamming"), profile, "weak")
    assert verdict.violated
    assert verdict.witness["element"] == [4, 1]
    assert all(row.endswith("-") for row in verdict.witness["winners"])
    assert len(verdict.witness["winners"]) == 6
