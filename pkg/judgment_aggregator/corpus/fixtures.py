"""Named fixtures: shipped agenda/profile files with their expected rule outputs and verdicts."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from ..agenda import Agenda
from ..axioms.compare import compare_rules
from ..axioms.suite import check_instance
from ..bridge.preferences import PreferenceProfile, build_preference_agenda, decode_winners, encode
from ..config import AggregatorConfig
from ..data_models import POS, ExpectationResult, FixtureResult, JudgmentSet, RuleOutcome
from ..loaders import load_preferences, load_profile
from ..metrics.distances import hamming
from ..profile import Profile
from ..rules.registry import get_rule
from ..rules.repair import profiles_within
from ..rules.scoring import reversal_rule, reversal_score

logger = logging.getLogger(__name__)

CORPUS_DIRECTORY = Path(__file__).resolve().parent.parent / "samples" / "corpus"


class UnknownFixtureError(KeyError):
    """Raised when a fixture identifier is not in the corpus."""

    def __init__(self, fixture_id: str) -> None:
        self.fixture_id = fixture_id
        super().__init__(fixture_id)

    def __str__(self) -> str:
        return f"Unknown fixture '{self.fixture_id}'"


@dataclass(slots=True)
class Expectation:
    label: str
    expected: Any
    compute: Callable[["FixtureContext"], Any]


@dataclass(slots=True)
class Fixture:
    """Input files of one fixture plus the values its replay must produce."""

    fixture_id: str
    locus: str
    description: str
    profiles: Dict[str, str] = field(default_factory=dict)
    preferences: Dict[str, str] = field(default_factory=dict)
    constraint: str = "Tr"
    expectations: List[Expectation] = field(default_factory=list)


class FixtureContext:
    """Loaded profiles of a fixture and cached rule outcomes on them."""

    def __init__(self, fixture: Fixture, config: AggregatorConfig) -> None:
        self.config = config
        self.profiles: Dict[str, Profile] = {}
        self.preferences: Dict[str, PreferenceProfile] = {}
        self._outcomes: Dict[tuple, RuleOutcome] = {}
        agendas: Dict[Path, Agenda] = {}
        for name, filename in fixture.profiles.items():
            self.profiles[name] = load_profile(
                CORPUS_DIRECTORY / filename, config=config, agenda_cache=agendas
            )
        preference_agendas: Dict[tuple, Agenda] = {}
        for name, filename in fixture.preferences.items():
            preferences = load_preferences(CORPUS_DIRECTORY / filename)
            alternatives = preferences.alternatives
            if alternatives not in preference_agendas:
                preference_agendas[alternatives] = build_preference_agenda(
                    alternatives, fixture.constraint, config.budget("max_alternatives")
                )
            self.preferences[name] = preferences
            self.profiles[name] = encode(preferences, preference_agendas[alternatives])

    def profile(self, name: str = "P") -> Profile:
        return self.profiles[name]

    @property
    def agenda(self) -> Agenda:
        return self.profile().agenda

    def outcome(self, rule_id: str, name: str = "P") -> RuleOutcome:
        key = (rule_id, name)
        if key not in self._outcomes:
            self._outcomes[key] = get_rule(rule_id).aggregate(self.profile(name), self.config)
        return self._outcomes[key]

    def rows(self, rule_id: str, name: str = "P") -> List[str]:
        return self.outcome(rule_id, name).rows()

    def rows_on(self, rule_id: str, profile: Profile) -> List[str]:
        return get_rule(rule_id).aggregate(profile, self.config).rows()

    def score(self, rule_id: str, name: str = "P") -> Any:
        """The common score of the winners."""
        outcome = self.outcome(rule_id, name)
        return outcome.scores[outcome.winners[0]]

    def detail(self, rule_id: str, key: str, name: str = "P") -> Any:
        return self.outcome(rule_id, name).details[key]

    def named(self, label: str) -> JudgmentSet:
        """``J<k>``: the k-th set listed by an extensional agenda."""
        return self.agenda.declared[int(label[1:]) - 1]

    def labels(self, rule_id: str, name: str = "P") -> List[str]:
        declared = list(self.agenda.declared)
        indices = sorted(declared.index(winner) for winner in self.outcome(rule_id, name).winners)
        return [f"J{index + 1}" for index in indices]

    def status(self, axiom: str, rule_id: str, *instance: Any) -> str:
        """Verdict of one check; profile names in ``instance`` are resolved, numbers kept."""
        parts = tuple(self.profile(item) if isinstance(item, str) else item for item in instance)
        verdict = check_instance(get_rule(rule_id), axiom, parts or (self.profile(),), self.config)
        return verdict.status.value


def _winners(rule_id: str, expected: List[str], name: str = "P") -> Expectation:
    suffix = "" if name == "P" else f"({name})"
    return Expectation(f"{rule_id}{suffix} winners", expected, lambda ctx: ctx.rows(rule_id, name))


def _geodesic_matrix(ctx: FixtureContext) -> List[List[int]]:
    index = ctx.agenda.index_of
    table = ctx.agenda.geodesic_table
    declared = ctx.agenda.declared
    return [[table[index[first]][index[second]] for second in declared] for first in declared]


def _off_diagonal_geodesics(ctx: FixtureContext) -> List[int]:
    table = ctx.agenda.geodesic_table
    return sorted(
        {value for i, row in enumerate(table) for j, value in enumerate(row) if i != j}
    )


def _hamming_row(label: str) -> Callable[[FixtureContext], List[int]]:
    def compute(ctx: FixtureContext) -> List[int]:
        source = ctx.named(label)
        return [hamming(source, other) for other in ctx.agenda.declared]

    return compute


def _reversal_values(ctx: FixtureContext) -> Dict[str, List[int]]:
    profile = ctx.profile()
    values: Dict[str, set] = {"+": set(), "-": set()}
    for voter in profile.voters:
        for element in voter.elements():
            key = "+" if element[1] == POS else "-"
            values[key].add(reversal_score(profile.agenda, voter, element))
    return {key: sorted(found) for key, found in values.items()}


def _neighbourhood_size(name: str, radius: int) -> Callable[[FixtureContext], int]:
    def compute(ctx: FixtureContext) -> int:
        limit = ctx.config.budget("max_profiles")
        return len(profiles_within(ctx.profile(name), radius, limit))

    return compute


def _is_consistent(row: str) -> Callable[[FixtureContext], bool]:
    return lambda ctx: ctx.agenda.is_consistent(JudgmentSet.from_text(row))


FIXTURES: List[Fixture] = [
    Fixture(
        "running-17",
        "Table 1",
        "Seventeen voters on five issues; every majority-based rule differs.",
        profiles={"P": "running-17.profile"},
        expectations=[
            Expectation("rational sets", 18, lambda ctx: len(ctx.agenda.rational_sets)),
            Expectation(
                "N(P, issue)", [10, 10, 13, 6, 10], lambda ctx: ctx.profile().positive_counts()
            ),
            Expectation("m(P)", "+++-+", lambda ctx: str(ctx.profile().majoritarian_set())),
            Expectation(
                "m(P) consistent", False, lambda ctx: ctx.profile().is_majority_consistent()
            ),
            _winners("mc", ["+++++", "++--+", "--+-+"]),
            _winners("mcc", ["+++++", "++--+"]),
            _winners("med", ["+++++"]),
            Expectation("med score", 49, lambda ctx: ctx.score("med")),
            _winners("dsum-hamming", ["+++++"]),
            _winners("ra", ["--+-+"]),
            _winners("leximax", ["--+-+"]),
            _winners("young", ["--+-+", "--+--"]),
            Expectation("young removed voters", 3, lambda ctx: ctx.detail("young", "removed")),
            _winners("mpc", ["+++++"]),
            Expectation("mpc distance", 3, lambda ctx: ctx.detail("mpc", "distance")),
        ],
    ),
    Fixture(
        "ex1-constrained",
        "Example 1",
        "Three issues under the integrity constraint q -> r.",
        profiles={"P": "ex1-constrained.profile"},
        expectations=[
            Expectation(
                "rational sets",
                ["+++", "+--", "-+-", "---"],
                lambda ctx: [str(judgment) for judgment in ctx.agenda.rational_sets],
            ),
            Expectation("N(P, q)", 3, lambda ctx: ctx.profile().support_count((1, POS))),
            Expectation("{!(p & r), q, !(p & q)} consistent", True, _is_consistent("-+-")),
            Expectation("{p & r, q, !(p & q)} consistent", False, _is_consistent("++-")),
        ],
    ),
    Fixture(
        "dgsum-not-mp",
        "Table 3",
        "Geodesic sum rule rejects the consistent majority when all sets are adjacent.",
        profiles={"P": "dgsum-not-mp.profile"},
        expectations=[
            Expectation("rational sets", 8, lambda ctx: len(ctx.agenda.rational_sets)),
            Expectation("off-diagonal geodesic distances", [1], _off_diagonal_geodesics),
            Expectation("m(P)", "++++++", lambda ctx: str(ctx.profile().majoritarian_set())),
            _winners("dsum-geodesic", ["-++--+"]),
            Expectation(
                "dsum-geodesic majority-preservation",
                "violated",
                lambda ctx: ctx.status("majority-preservation", "dsum-geodesic"),
            ),
        ],
    ),
    Fixture(
        "unanimity-p",
        "Table 5",
        "Every voter accepts p; MCC and MPC reject it.",
        profiles={"P": "unanimity-p.profile"},
        expectations=[
            _winners("mcc", ["-+--+--+--"]),
            _winners("mpc", ["-+--+--+--"]),
            Expectation("mpc distance", 2, lambda ctx: ctx.detail("mpc", "distance")),
            Expectation(
                "mc keeps the mcc winner", True, lambda ctx: "-+--+--+--" in ctx.rows("mc")
            ),
            Expectation(
                "mc has a winner accepting p",
                True,
                lambda ctx: any(row.startswith("+") for row in ctx.rows("mc")),
            ),
            Expectation(
                "mc weak-unanimity",
                "holds-on-sample",
                lambda ctx: ctx.status("weak-unanimity", "mc"),
            ),
            Expectation(
                "mc strong-unanimity", "violated", lambda ctx: ctx.status("strong-unanimity", "mc")
            ),
            Expectation(
                "mcc weak-unanimity", "violated", lambda ctx: ctx.status("weak-unanimity", "mcc")
            ),
            Expectation(
                "mpc weak-unanimity", "violated", lambda ctx: ctx.status("weak-unanimity", "mpc")
            ),
        ],
    ),
    Fixture(
        "dgsum-unanimity",
        "Tables 7 and 8",
        "Geodesic sum rule picks the set rejecting the unanimously accepted p13.",
        profiles={"P": "dgsum-unanimity.profile"},
        expectations=[
            Expectation("dsum-geodesic winners", ["J7"], lambda ctx: ctx.labels("dsum-geodesic")),
            Expectation("dsum-geodesic distance", 3, lambda ctx: ctx.score("dsum-geodesic")),
            Expectation(
                "geodesic distances J1..J7",
                [
                    [0, 1, 2, 3, 2, 1, 1],
                    [1, 0, 1, 2, 3, 2, 2],
                    [2, 1, 0, 1, 2, 3, 1],
                    [3, 2, 1, 0, 1, 2, 2],
                    [2, 3, 2, 1, 0, 1, 1],
                    [1, 2, 3, 2, 1, 0, 2],
                    [1, 2, 1, 2, 1, 2, 0],
                ],
                _geodesic_matrix,
            ),
            Expectation(
                "dsum-geodesic weak-unanimity",
                "violated",
                lambda ctx: ctx.status("weak-unanimity", "dsum-geodesic"),
            ),
        ],
    ),
    Fixture(
        "frev-unanimity",
        "Table 9",
        "Reversal scoring picks the set rejecting the unanimously accepted p13.",
        profiles={"P": "frev-unanimity.profile"},
        expectations=[
            Expectation("reversal scores by sign", {"+": [5], "-": [8]}, _reversal_values),
            Expectation("frev winners", ["J4"], lambda ctx: ctx.labels("frev")),
            Expectation("frev score", 192, lambda ctx: ctx.score("frev")),
            Expectation(
                "frev score of J1",
                163,
                lambda ctx: reversal_rule().total_score(ctx.profile(), ctx.named("J1")),
            ),
            Expectation(
                "frev weak-unanimity",
                "violated",
                lambda ctx: ctx.status("weak-unanimity", "frev"),
            ),
        ],
    ),
    Fixture(
        "ra-vs-leximax",
        "RA versus leximax table",
        "Ranked agenda keeps three sets, leximax one.",
        profiles={"P": "ra-vs-leximax.profile"},
        expectations=[
            _winners("ra", ["++++++", "-+-+-+", "--+-++"]),
            _winners("leximax", ["++++++"]),
        ],
    ),
    Fixture(
        "ra-vs-young",
        "RA versus Young table",
        "Young keeps one set, ranked agenda two.",
        profiles={"P": "ra-vs-young.profile"},
        expectations=[
            _winners("ra", ["+++++++", "++++++-"]),
            _winners("young", ["+++++++"]),
            Expectation("young removed voters", 2, lambda ctx: ctx.detail("young", "removed")),
        ],
    ),
    Fixture(
        "mpc-vs-med",
        "MPC versus MED table",
        "MED and MPC pick disjoint sets on three voters.",
        profiles={"P": "mpc-vs-med.profile"},
        expectations=[
            _winners("med", ["+++------"]),
            Expectation("med score", 17, lambda ctx: ctx.score("med")),
            _winners("mpc", ["---------"]),
            Expectation("mpc distance", 3, lambda ctx: ctx.detail("mpc", "distance")),
        ],
    ),
    Fixture(
        "mpc-homogeneity",
        "MPC homogeneity table",
        "Doubling the electorate changes the MPC outcome.",
        profiles={"P": "mpc-homogeneity.profile"},
        expectations=[
            _winners("mpc", ["++--", "--+-"]),
            Expectation("mpc distance", 2, lambda ctx: ctx.detail("mpc", "distance")),
            Expectation(
                "mpc(2P) winners",
                ["--+-"],
                lambda ctx: ctx.rows_on("mpc", ctx.profile().replicate(2)),
            ),
            Expectation(
                "mpc homogeneity",
                "violated",
                lambda ctx: ctx.status("homogeneity", "mpc", "P", 2),
            ),
            Expectation(
                "mpc reinforcement with itself",
                "violated",
                lambda ctx: ctx.status("reinforcement", "mpc", "P", "P"),
            ),
        ],
    ),
    Fixture(
        "mpc-vs-mcc",
        "MPC versus MCC table",
        "On the doubled profile MPC and MCC share no winner.",
        profiles={"P": "mpc-vs-mcc.profile"},
        expectations=[
            _winners("mpc", ["--+-"]),
            _winners("mcc", ["++++", "++--"]),
            Expectation(
                "common winners",
                [],
                lambda ctx: sorted(set(ctx.rows("mpc")) & set(ctx.rows("mcc"))),
            ),
            Expectation(
                "mpc/mcc relation",
                "incomparable",
                lambda ctx: compare_rules(
                    get_rule("mpc"), get_rule("mcc"), [ctx.profile()], ctx.config
                ).relation,
            ),
        ],
    ),
    Fixture(
        "mpc-monotonicity",
        "MPC monotonicity tables",
        "Improving p1 for the third voter pulls a set rejecting p1 into the MPC outcome.",
        profiles={"P": "mpc-monotonicity.profile", "P'": "mpc-monotonicity-improved.profile"},
        expectations=[
            Expectation(
                "d_H(J3, J8)", 5, lambda ctx: hamming(ctx.named("J3"), ctx.named("J8"))
            ),
            Expectation("d_H from J1", [0, 10, 11, 6, 6, 3, 9, 10, 10], _hamming_row("J1")),
            Expectation("d_H from J2", [10, 0, 11, 4, 6, 9, 3, 8, 10], _hamming_row("J2")),
            Expectation("d_H from J3", [11, 11, 0, 9, 5, 10, 10, 5, 1], _hamming_row("J3")),
            Expectation("d_H from J9", [10, 10, 1, 8, 6, 11, 11, 6, 0], _hamming_row("J9")),
            Expectation("profiles within 5 of P", 10, _neighbourhood_size("P", 5)),
            Expectation("profiles within 6 of P'", 14, _neighbourhood_size("P'", 6)),
            Expectation("mpc winners", ["J4"], lambda ctx: ctx.labels("mpc")),
            Expectation("mpc distance", 5, lambda ctx: ctx.detail("mpc", "distance")),
            Expectation("mpc(P') winners", ["J4", "J5"], lambda ctx: ctx.labels("mpc", "P'")),
            Expectation("mpc(P') distance", 6, lambda ctx: ctx.detail("mpc", "distance", "P'")),
            Expectation(
                "mpc monotonicity", "violated", lambda ctx: ctx.status("monotonicity", "mpc")
            ),
        ],
    ),
    Fixture(
        "dmax-not-mp",
        "Max-Hamming majority-preservation proposition",
        "Max-Hamming rule breaks strict, then weak majority-preservation.",
        profiles={"strict": "dmax-not-mp-strict.profile", "weak": "dmax-not-mp-weak.profile"},
        expectations=[
            _winners("dmax-hamming", ["++", "+-"], "strict"),
            Expectation(
                "strict majority-preservation",
                "violated",
                lambda ctx: ctx.status("majority-preservation", "dmax-hamming", "strict"),
            ),
            Expectation(
                "weak majority-preservation on the first profile",
                "holds-on-sample",
                lambda ctx: ctx.status("weak-majority-preservation", "dmax-hamming", "strict"),
            ),
            _winners("dmax-hamming", ["+-"], "weak"),
            Expectation(
                "m(second profile)", "--", lambda ctx: str(ctx.profile("weak").majoritarian_set())
            ),
            Expectation(
                "weak majority-preservation on the second profile",
                "violated",
                lambda ctx: ctx.status("weak-majority-preservation", "dmax-hamming", "weak"),
            ),
        ],
    ),
    Fixture(
        "dmax-reinforcement",
        "Max-Hamming reinforcement example",
        "Joining two electorates with a common winner keeps extra sets.",
        profiles={"P": "dmax-reinforcement-p.profile", "Q": "dmax-reinforcement-q.profile"},
        expectations=[
            _winners("dmax-hamming", ["++-", "+-+", "+--", "-++", "-+-", "--+"]),
            _winners("dmax-hamming", ["-++"], "Q"),
            Expectation(
                "dmax-hamming(P+Q) winners",
                ["++-", "+-+", "-++", "-+-", "--+"],
                lambda ctx: ctx.rows_on("dmax-hamming", ctx.profile() + ctx.profile("Q")),
            ),
            Expectation(
                "reinforcement",
                "violated",
                lambda ctx: ctx.status("reinforcement", "dmax-hamming", "P", "Q"),
            ),
            Expectation(
                "weak reinforcement",
                "holds-on-sample",
                lambda ctx: ctx.status("weak-reinforcement", "dmax-hamming", "P", "Q"),
            ),
        ],
    ),
    Fixture(
        "dmax-unanimity",
        "Max-Hamming unanimity example",
        "Two voters agree only on the last issue; every max-Hamming winner rejects it.",
        profiles={"P": "dmax-unanimity.profile"},
        expectations=[
            Expectation("rational sets", 16, lambda ctx: len(ctx.agenda.rational_sets)),
            _winners("dmax-hamming", ["++---", "+-+--", "+--+-", "-++--", "-+-+-", "--++-"]),
            Expectation("dmax-hamming distance", 3, lambda ctx: ctx.score("dmax-hamming")),
            Expectation(
                "dmax-hamming weak-unanimity",
                "violated",
                lambda ctx: ctx.status("weak-unanimity", "dmax-hamming"),
            ),
            Expectation(
                "ra strong-unanimity",
                "holds-on-sample",
                lambda ctx: ctx.status("strong-unanimity", "ra"),
            ),
        ],
    ),
    Fixture(
        "ra-reinforcement",
        "Ranked agenda reinforcement construction",
        "Each electorate blocks d > a with its own strong path; joined, d > a comes first.",
        preferences={"P": "ra-reinforcement-p.prefs", "Q": "ra-reinforcement-q.prefs"},
        constraint="Tr",
        expectations=[
            _winners("ra", ["++++++"]),
            _winners("ra", ["++++++"], "Q"),
            _winners("leximax", ["++++++"]),
            _winners("leximax", ["++++++"], "Q"),
            Expectation(
                "ra(P+Q) winners",
                ["++-+--", "+----+", "-+-++-", "---+++"],
                lambda ctx: ctx.rows_on("ra", ctx.profile() + ctx.profile("Q")),
            ),
            Expectation(
                "leximax(P+Q) winners",
                ["++-+--", "-+-++-", "---+++"],
                lambda ctx: ctx.rows_on("leximax", ctx.profile() + ctx.profile("Q")),
            ),
            Expectation(
                "ra reinforcement",
                "violated",
                lambda ctx: ctx.status("reinforcement", "ra", "P", "Q"),
            ),
            Expectation(
                "ra weak reinforcement",
                "violated",
                lambda ctx: ctx.status("weak-reinforcement", "ra", "P", "Q"),
            ),
            Expectation(
                "leximax reinforcement",
                "violated",
                lambda ctx: ctx.status("reinforcement", "leximax", "P", "Q"),
            ),
        ],
    ),
    Fixture(
        "pref-incomparable",
        "Four-alternative preference table",
        "Three voters over c1..c4 under transitivity; three rules disagree.",
        preferences={"P": "pref-incomparable.prefs"},
        constraint="Tr",
        expectations=[
            Expectation("first voter", "+++---", lambda ctx: str(ctx.profile().voters[0])),
            _winners("frev", ["++++++"]),
            _winners("dsum-geodesic", ["-+++++"]),
            _winners("dmax-hamming", ["+++++-", "+++-++"]),
            Expectation(
                "dmax-hamming decoded winners",
                ["c1"],
                lambda ctx: decode_winners(
                    ctx.outcome("dmax-hamming"), ctx.preferences["P"].alternatives
                ),
            ),
        ],
    ),
]

_BY_ID: Dict[str, Fixture] = {fixture.fixture_id: fixture for fixture in FIXTURES}


def list_fixtures() -> List[str]:
    return [fixture.fixture_id for fixture in FIXTURES]


def get_fixture(fixture_id: str) -> Fixture:
    try:
        return _BY_ID[fixture_id]
    except KeyError as exc:
        raise UnknownFixtureError(fixture_id) from exc


def load_fixture(fixture_id: str, config: Optional[AggregatorConfig] = None) -> FixtureContext:
    return FixtureContext(get_fixture(fixture_id), config or AggregatorConfig())


def run_fixture(fixture_id: str, config: Optional[AggregatorConfig] = None) -> FixtureResult:
    """Replay every expectation of one fixture."""
    fixture = get_fixture(fixture_id)
    started = time.perf_counter()
    context = FixtureContext(fixture, config or AggregatorConfig())
    results = [
        ExpectationResult(item.label, item.expected, item.compute(context))
        for item in fixture.expectations
    ]
    seconds = time.perf_counter() - started
    result = FixtureResult(fixture.fixture_id, fixture.locus, results, seconds)
    logger.debug(
        "fixture %s: %d expectations, %d diffs, %.2fs",
        fixture_id,
        len(results),
        len(result.diffs),
        seconds,
    )
    return result


def run_all(config: Optional[AggregatorConfig] = None) -> List[FixtureResult]:
    return [run_fixture(fixture_id, config) for fixture_id in list_fixtures()]
