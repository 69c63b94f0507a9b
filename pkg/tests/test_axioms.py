from __future__ import annotations

from pathlib import Path

import pytest

from judgment_aggregator.agenda import Agenda
from judgment_aggregator.axioms import (
    InstanceGenerator,
    UnknownAxiomError,
    check_homogeneity,
    check_majority_preservation,
    check_monotonicity,
    check_reinforcement,
    check_unanimity,
    classify_improvement,
    compare_rules,
    exhaustive_profiles,
    phi_improvements,
    replay_witness,
    run_axiom_check,
    sampled_verdict,
    search_majority_violation,
)
from judgment_aggregator.axioms.checkers import (
    NEGATION_DROPPED,
    NEGATION_REPLACED,
    UNCHANGED,
)
from judgment_aggregator.axioms.suite import expected_to_hold, validate_axiom
from judgment_aggregator.config import AggregatorConfig, ConfigurationError
from judgment_aggregator.data_models import NEG, POS, AxiomStatus
from judgment_aggregator.loaders import load_profile
from judgment_aggregator.logic import Atom
from judgment_aggregator.profile import Profile
from judgment_aggregator.rules.registry import get_rule

CORPUS = Path(__file__).resolve().parents[1] / "judgment_aggregator" / "samples" / "corpus"


def load_corpus_profile(name: str) -> Profile:
    return load_profile(CORPUS / f"{name}.profile")


def two_issue_agenda() -> Agenda:
    return Agenda([Atom("p"), Atom("q")], name="pq")


def test_geodesic_sum_rule_breaks_majority_preservation():
    profile = load_corpus_profile("dgsum-not-mp")
    verdict = check_majority_preservation(get_rule("dsum-geodesic"), profile)
    assert verdict.status == AxiomStatus.VIOLATED
    assert verdict.witness["majority"] == "++++++"
    assert verdict.witness["winners"] == ["-++--+"]
    assert check_majority_preservation(get_rule("med"), profile).status == AxiomStatus.HOLDS


def test_majority_preservation_is_vacuous_on_inconsistent_majority():
    profile = load_corpus_profile("running-17")
    verdict = check_majority_preservation(get_rule("frev"), profile)
    assert verdict.status == AxiomStatus.HOLDS
    assert verdict.checks == 0
    assert verdict.details == {"vacuous": True}


def test_max_hamming_breaks_weak_majority_preservation():
    profile = load_corpus_profile("dmax-not-mp-weak")
    verdict = check_majority_preservation(get_rule("dmax-hamming"), profile, "weak")
    assert verdict.violated
    assert verdict.witness["expected"] == ["--"]
    assert verdict.witness["winners"] == ["+-"]
    with pytest.raises(ValueError):
        check_majority_preservation(get_rule("dmax-hamming"), profile, "strong")


def test_unanimity_strengths_separate_mc_and_mcc():
    profile = load_corpus_profile("unanimity-p")
    assert check_unanimity(get_rule("mc"), profile, "weak").status == AxiomStatus.HOLDS
    strong = check_unanimity(get_rule("mc"), profile, "strong")
    assert strong.violated
    assert strong.witness["phi"] == "p"
    assert check_unanimity(get_rule("mcc"), profile, "weak").violated


def test_phi_improvements_keep_voters_rational():
    agenda = two_issue_agenda()
    profile = Profile.from_rows(agenda, ["++", "--", "--"])
    assert [index for index, _ in phi_improvements(profile, (0, POS))] == [1, 2]
    assert [index for index, _ in phi_improvements(profile, (0, NEG))] == [0]
    constrained = load_corpus_profile("ex1-constrained").agenda
    # "-++" is not rational
    assert phi_improvements(Profile.from_rows(constrained, ["+++"]), (0, NEG)) == []


@pytest.mark.parametrize(
    "rows, expected",
    [
        (["--", "--", "--"], UNCHANGED),
        (["++", "--", "--", "--"], NEGATION_DROPPED),
        (["++", "--", "--"], NEGATION_REPLACED),
        (["++", "--"], NEGATION_REPLACED),
    ],
)
def test_improvements_fall_in_exactly_one_class(rows, expected):
    profile = Profile.from_rows(two_issue_agenda(), rows)
    _, improved = phi_improvements(profile, (0, POS))[-1]
    assert classify_improvement(profile, improved, (0, POS)) == [expected]


def test_maximal_condorcet_rule_is_monotonic_on_running_example():
    profile = load_corpus_profile("running-17")
    verdict = check_monotonicity(get_rule("mc"), profile)
    assert verdict.status == AxiomStatus.HOLDS
    assert verdict.checks == 7


def test_mpc_breaks_monotonicity():
    profile = load_corpus_profile("mpc-monotonicity")
    verdict = check_monotonicity(get_rule("mpc"), profile)
    assert verdict.violated
    assert "improved_profile" in verdict.witness


def test_reinforcement_on_max_hamming_example():
    first = load_corpus_profile("dmax-reinforcement-p")
    second = load_corpus_profile("dmax-reinforcement-q")
    # separate loads give separate agenda objects
    second = Profile(first.agenda, second.voters)
    rule = get_rule("dmax-hamming")
    assert check_reinforcement(rule, first, second).violated
    assert check_reinforcement(rule, first, second, "weak").status == AxiomStatus.HOLDS


def test_reinforcement_is_vacuous_without_common_winner():
    agenda = two_issue_agenda()
    first = Profile.from_rows(agenda, ["++"])
    second = Profile.from_rows(agenda, ["--"])
    verdict = check_reinforcement(get_rule("med"), first, second)
    assert verdict.checks == 0
    assert verdict.details["vacuous"] is True


def test_homogeneity_of_median_and_failure_of_mpc():
    assert check_homogeneity(get_rule("med"), load_corpus_profile("running-17")).status == (
        AxiomStatus.HOLDS
    )
    verdict = check_homogeneity(get_rule("mpc"), load_corpus_profile("mpc-homogeneity"), 2)
    assert verdict.violated
    assert verdict.witness["winners"] == ["++--", "--+-"]
    assert verdict.witness["replicated_winners"] == ["--+-"]


def test_witness_replays_to_the_same_violation():
    rule = get_rule("dsum-geodesic")
    verdict = check_majority_preservation(rule, load_corpus_profile("dgsum-not-mp"))
    replayed = replay_witness(rule, verdict)
    assert replayed.violated
    assert replayed.witness["winners"] == verdict.witness["winners"]
    with pytest.raises(ValueError):
        replay_witness(rule, check_homogeneity(get_rule("med"), load_corpus_profile("running-17")))


def test_run_axiom_check_stops_at_first_violation():
    agenda = two_issue_agenda()
    instances = [
        (Profile.from_rows(agenda, ["++"]),),
        (Profile.from_rows(agenda, ["+-", "++", "--", "--", "--"]),),
        (Profile.from_rows(agenda, ["--"]),),
    ]
    verdict = run_axiom_check(get_rule("dmax-hamming"), "weak-majority-preservation", instances)
    assert verdict.violated
    assert verdict.details["instance"] == 2
    held = run_axiom_check(get_rule("med"), "weak-majority-preservation", instances)
    assert held.status == AxiomStatus.HOLDS
    assert held.details["instances"] == 3


def test_sampled_verdicts_are_reproducible():
    rule = get_rule("med")
    first = sampled_verdict(rule, "homogeneity", samples=15, seed=3)
    second = sampled_verdict(rule, "homogeneity", samples=15, seed=3)
    assert first.status == AxiomStatus.HOLDS
    assert (first.checks, first.seed) == (second.checks, second.seed) == (15, 3)


def test_sampled_reinforcement_counts_non_vacuous_pairs():
    verdict = sampled_verdict(get_rule("med"), "reinforcement", samples=40, seed=5)
    assert verdict.status == AxiomStatus.HOLDS
    assert verdict.checks == verdict.details["informative"] == 40
    assert verdict.details["instances"] >= 40


def test_vacuous_instances_stop_at_the_stream_end(caplog):
    agenda = two_issue_agenda()
    pair = (Profile.from_rows(agenda, ["++"]), Profile.from_rows(agenda, ["--"]))
    verdict = run_axiom_check(get_rule("med"), "reinforcement", [pair] * 5, target=3)
    assert verdict.status == AxiomStatus.HOLDS
    assert verdict.details == {"instances": 5, "informative": 0}
    assert "only 0 of 3" in caplog.text


def test_attempt_factor_must_be_positive():
    with pytest.raises(ConfigurationError):
        AggregatorConfig.from_dict({"sampling": {"attempt_factor": 0}})


def test_generator_is_deterministic_per_seed():
    first = InstanceGenerator(seed=11).random_instance()
    second = InstanceGenerator(seed=11).random_instance()
    assert first.agenda.issues == second.agenda.issues
    assert first.voters == second.voters
    with pytest.raises(ValueError):
        InstanceGenerator(min_voters=3, max_voters=2)


def test_exhaustive_profiles_ignore_voter_order():
    agenda = Agenda([Atom("p")])
    assert [str(profile) for profile in exhaustive_profiles(agenda, 2)] == [
        "Profile(+, +)",
        "Profile(+, -)",
        "Profile(-, -)",
    ]


def test_compare_rules_reports_strict_inclusion():
    profile = load_corpus_profile("running-17")
    report = compare_rules(get_rule("mcc"), get_rule("mc"), [profile])
    assert report.relation == "subset"
    assert report.left_in_right == 1
    assert report.right_not_in_left_witness["extra"] == ["--+-+"]


def test_axiom_registry():
    assert expected_to_hold("ra", "strong-unanimity")
    assert not expected_to_hold("frev", "majority-preservation")
    with pytest.raises(UnknownAxiomError):
        validate_axiom("anonymity")


def test_exhaustive_majority_search_finds_reversal_counterexample():
    verdict = search_majority_violation("frev", "strict", voters=(3,))
    assert verdict.status is AxiomStatus.VIOLATED
    assert verdict.witness["winners"] != verdict.witness["expected"]
    assert len(verdict.witness["profile"]) == 3


def test_exhaustive_majority_search_clears_the_median_rule():
    verdict = search_majority_violation("med", "strict")
    assert verdict.status is AxiomStatus.HOLDS
    assert verdict.details["instances"] == 56 + 252
