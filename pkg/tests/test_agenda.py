from __future__ import annotations

from pathlib import Path

import pytest

from judgment_aggregator.agenda import Agenda, AgendaError
from judgment_aggregator.config import AggregatorConfig, BudgetExceededError
from judgment_aggregator.data_models import NEG, POS, JudgmentSet
from judgment_aggregator.loaders import (
    FileFormatError,
    detect_format,
    format_agenda,
    load_agenda,
    load_profile,
    parse_agenda_text,
    parse_profile_text,
)
from judgment_aggregator.logic import Atom, Not, parse_formula
from judgment_aggregator.profile import Profile, ProfileError

CORPUS = Path(__file__).resolve().parents[1] / "judgment_aggregator" / "samples" / "corpus"


def load_constrained_agenda() -> Agenda:
    return load_agenda(CORPUS / "ex1-constrained.agenda")


def js(text: str) -> JudgmentSet:
    return JudgmentSet.from_text(text)


def test_rational_sets_follow_the_constraint():
    agenda = load_constrained_agenda()
    assert [str(judgment) for judgment in agenda.rational_sets] == ["+++", "+--", "-+-", "---"]
    assert agenda.is_rational(js("-+-"))
    assert not agenda.is_rational(js("++-"))


def test_running_agenda_has_eighteen_rational_sets():
    agenda = load_agenda(CORPUS / "running-17.agenda")
    assert len(agenda) == 5
    assert len(agenda.rational_sets) == 18


def test_partial_sets_are_consistent_when_they_extend():
    agenda = load_constrained_agenda()
    assert agenda.is_consistent(js("+?-"))
    assert not agenda.is_consistent(js("++-"))
    assert [str(item) for item in agenda.extensions(js("+??"))] == ["+++", "+--"]
    with pytest.raises(AgendaError):
        agenda.extensions(js("++-"))


def test_consistency_by_models_agrees_with_enumeration():
    agenda = load_constrained_agenda()
    for row in ("+?-", "++-", "?+-", "-??"):
        assert agenda.is_consistent_by_models(js(row)) == agenda.is_consistent(js(row))


def test_maximal_consistent_subsets_of_an_inconsistent_set():
    agenda = load_constrained_agenda()
    subsets = agenda.max_consistent_subsets({(0, POS), (1, POS), (2, NEG)})
    assert subsets == [
        frozenset({(0, POS), (1, POS)}),
        frozenset({(0, POS), (2, NEG)}),
        frozenset({(1, POS), (2, NEG)}),
    ]
    assert agenda.maxcard_consistent_subsets({(0, POS), (1, POS), (2, NEG)}) == subsets


def test_describe_renders_selected_formulas():
    agenda = load_constrained_agenda()
    assert agenda.describe(js("+?-")) == "{p & r, !(p & q)}"


def test_agenda_rejects_bad_issues():
    p, q = Atom("p"), Atom("q")
    with pytest.raises(AgendaError):
        Agenda([Not(p)])
    with pytest.raises(AgendaError):
        Agenda([parse_formula("p | !p")])
    with pytest.raises(AgendaError):
        Agenda([p, p])
    with pytest.raises(AgendaError):
        Agenda([p, q], constraint=parse_formula("p & !p")).rational_sets
    with pytest.raises(BudgetExceededError):
        Agenda([p, q], max_issues=1)


def test_extensional_agenda_uses_declared_sets():
    agenda = Agenda.extensional([Atom("a"), Atom("b")], [js("+-"), js("-+")])
    assert agenda.is_extensional
    assert [str(item) for item in agenda.rational_sets] == ["+-", "-+"]
    assert not agenda.is_consistent(js("++"))
    with pytest.raises(AgendaError):
        Agenda.extensional([Atom("a")], [js("+-")])


def test_profile_majority_and_the_doctrinal_paradox():
    agenda = load_constrained_agenda()
    profile = Profile.from_rows(agenda, ["+++", "+--", "-+-"])
    assert profile.positive_counts() == [2, 2, 1]
    assert str(profile.majoritarian_set()) == "++-"
    assert not profile.is_majority_consistent()
    assert profile.support_count((1, NEG)) == 1


def test_profile_ties_leave_issues_undecided():
    agenda = load_constrained_agenda()
    profile = Profile.from_rows(agenda, ["+++", "---"])
    assert str(profile.majoritarian_set()) == "???"
    assert profile.is_majority_consistent()


def test_profile_operations():
    agenda = load_constrained_agenda()
    profile = Profile.from_rows(agenda, ["+++", "+--"])
    assert profile.replicate(3).n == 6
    assert (2 * profile).voters == profile.voters * 2
    assert (profile + profile).n == 4
    assert profile.without([0]).voters == (js("+--"),)
    other = load_constrained_agenda()
    with pytest.raises(ProfileError):
        profile + Profile.from_rows(other, ["+++"])
    with pytest.raises(ProfileError):
        Profile.from_rows(agenda, ["++-"])
    with pytest.raises(ProfileError):
        Profile(agenda, [])


def test_agenda_text_format_reads_back():
    agenda = load_constrained_agenda()
    again = parse_agenda_text(format_agenda(agenda))
    assert again.issues == agenda.issues
    assert again.rational_sets == agenda.rational_sets


def test_profile_text_with_multiplicities():
    agenda = load_constrained_agenda()
    profile = parse_profile_text("agenda: x\n+ + + x3\n- + -  # comment\n", agenda)
    assert profile.n == 4
    assert profile.positive_counts() == [3, 4, 3]


def test_profile_text_reports_line_of_irrational_row():
    agenda = load_constrained_agenda()
    with pytest.raises(FileFormatError) as excinfo:
        parse_profile_text("+++\n++-\n", agenda, "votes.profile")
    assert excinfo.value.line == 2
    assert str(excinfo.value).startswith("votes.profile:2:")


def test_agenda_file_errors():
    with pytest.raises(FileFormatError):
        parse_agenda_text("p\nq\n")
    with pytest.raises(FileFormatError):
        parse_agenda_text("extensional\np\nq\n")
    with pytest.raises(FileFormatError):
        parse_agenda_text("constraint: T\np &\n")


def test_profile_header_resolves_relative_agenda(tmp_path):
    (tmp_path / "tiny.agenda").write_text("constraint: T\np\nq\n", encoding="utf-8")
    profile_path = tmp_path / "tiny.profile"
    profile_path.write_text("agenda: tiny.agenda\n++\n+-\n-- x2\n", encoding="utf-8")
    profile = load_profile(profile_path, config=AggregatorConfig())
    assert profile.n == 4
    assert str(profile.majoritarian_set()) == "?-"


def test_detect_format():
    assert detect_format("alternatives: a b\na > b\n") == "preferences"
    assert detect_format("# votes\nagenda: x.agenda\n++\n") == "profile"
    assert detect_format("constraint: T\np\n") == "agenda"
    assert detect_format("extensional\np\nsets:\n+\n") == "agenda"
    assert detect_format("++\n") == "profile"
