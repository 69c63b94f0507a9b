"""Per-instance axiom checks.

Every check returns an :class:`AxiomVerdict`. A violated verdict carries a witness
holding the agenda in file format and the profile rows, so that
:func:`replay_witness` can rebuild the instance and run the same check again.
"""

from __future__ import annotations

from typing import Any, Dict, List, Optional, Tuple

from ..config import AggregatorConfig
from ..data_models import UNDECIDED, AxiomStatus, AxiomVerdict, Element, sort_sets
from ..loaders import format_agenda, parse_agenda_text
from ..profile import Profile
from ..rules.base import BaseRule

STRENGTHS = ("strict", "weak")

UNCHANGED = "unchanged"
NEGATION_DROPPED = "negation-dropped"
NEGATION_REPLACED = "negation-replaced"


def _rows(sets) -> List[str]:
    return [str(judgment) for judgment in sort_sets(sets)]


def _instance(profile: Profile) -> Dict[str, Any]:
    return {
        "agenda": format_agenda(profile.agenda).splitlines(),
        "profile": [str(voter) for voter in profile.voters],
    }


def _holds(axiom: str, rule: BaseRule, checks: int, **details: Any) -> AxiomVerdict:
    return AxiomVerdict(
        axiom=axiom,
        rule_id=rule.rule_id,
        status=AxiomStatus.HOLDS,
        checks=checks,
        details=details,
    )


def _violated(axiom: str, rule: BaseRule, checks: int, witness: Dict[str, Any]) -> AxiomVerdict:
    return AxiomVerdict(
        axiom=axiom,
        rule_id=rule.rule_id,
        status=AxiomStatus.VIOLATED,
        witness=witness,
        checks=checks,
    )


def _check_strength(strength: str) -> None:
    if strength not in STRENGTHS:
        raise ValueError(f"Unknown strength '{strength}'; expected strict or weak")


def check_majority_preservation(
    rule: BaseRule,
    profile: Profile,
    strength: str = "strict",
    config: Optional[AggregatorConfig] = None,
) -> AxiomVerdict:
    """F(P) = ext(m(P)) (strict) or ext(m(P)) within F(P) (weak) for majority-consistent P."""
    _check_strength(strength)
    axiom = "majority-preservation" if strength == "strict" else "weak-majority-preservation"
    if not profile.is_majority_consistent():
        return _holds(axiom, rule, 0, vacuous=True)
    majority = profile.majoritarian_set()
    expected = set(profile.agenda.extensions(majority))
    actual = rule.aggregate(profile, config).winner_set
    ok = actual == expected if strength == "strict" else expected <= actual
    if ok:
        return _holds(axiom, rule, 1)
    witness = _instance(profile)
    witness.update(
        {
            "strength": strength,
            "majority": str(majority),
            "expected": _rows(expected),
            "winners": _rows(actual),
        }
    )
    return _violated(axiom, rule, 1, witness)


def unanimous_elements(profile: Profile) -> List[Element]:
    first = profile.voters[0]
    return [
        (issue, sign)
        for issue, sign in enumerate(first.signs)
        if all(voter.signs[issue] == sign for voter in profile.voters)
    ]


def check_unanimity(
    rule: BaseRule,
    profile: Profile,
    strength: str = "weak",
    config: Optional[AggregatorConfig] = None,
) -> AxiomVerdict:
    """Every element accepted by all voters is in some winner (weak) or every winner (strong)."""
    if strength not in ("weak", "strong"):
        raise ValueError(f"Unknown strength '{strength}'; expected weak or strong")
    axiom = f"{strength}-unanimity"
    elements = unanimous_elements(profile)
    if not elements:
        return _holds(axiom, rule, 0, vacuous=True)
    winners = rule.aggregate(profile, config).winners
    quantifier = any if strength == "weak" else all
    for element in elements:
        if not quantifier(winner.contains(element) for winner in winners):
            witness = _instance(profile)
            witness.update(
                {
                    "strength": strength,
                    "phi": profile.agenda.element_text(element),
                    "element": list(element),
                    "winners": _rows(winners),
                }
            )
            return _violated(axiom, rule, len(elements), witness)
    return _holds(axiom, rule, len(elements))


def phi_improvements(profile: Profile, element: Element) -> List[Tuple[int, Profile]]:
    """Profiles where one voter holding the negation of ``element`` switches to it.

    Only switches that leave the voter's set rational count; the list may be empty.
    """
    issue, sign = element
    agenda = profile.agenda
    improvements = []
    for index, voter in enumerate(profile.voters):
        if voter.signs[issue] != -sign:
            continue
        flipped = voter.with_sign(issue, sign)
        if agenda.is_rational(flipped):
            improvements.append((index, profile.replace(index, flipped)))
    return improvements


def classify_improvement(before: Profile, after: Profile, element: Element) -> List[str]:
    """Which of the three majoritarian-set relations holds after a phi-improvement.

    ``unchanged``: m(P') = m(P). ``negation-dropped``: the negation of phi was in m(P)
    and m(P') is m(P) without it. ``negation-replaced``: phi was not in m(P) and m(P')
    is m(P) with the negation of phi swapped for phi. Exactly one holds.
    """
    issue, sign = element
    old = before.majoritarian_set()
    new = after.majoritarian_set()
    dropped = old.with_sign(issue, UNDECIDED)
    replaced = old.with_sign(issue, sign)
    found = []
    if new == old:
        found.append(UNCHANGED)
    if old.signs[issue] == -sign and new == dropped:
        found.append(NEGATION_DROPPED)
    if old.signs[issue] != sign and new == replaced:
        found.append(NEGATION_REPLACED)
    return found


def check_monotonicity(
    rule: BaseRule, profile: Profile, config: Optional[AggregatorConfig] = None
) -> AxiomVerdict:
    """An element in every winner stays in every winner after any of its improvements."""
    axiom = "monotonicity"
    agenda = profile.agenda
    winners = rule.aggregate(profile, config).winners
    checks = 0
    for issue in range(len(agenda)):
        sign = winners[0].signs[issue]
        if any(winner.signs[issue] != sign for winner in winners):
            continue
        element = (issue, sign)
        for index, improved in phi_improvements(profile, element):
            checks += 1
            improved_winners = rule.aggregate(improved, config).winners
            if all(winner.contains(element) for winner in improved_winners):
                continue
            witness = _instance(profile)
            witness.update(
                {
                    "phi": agenda.element_text(element),
                    "element": list(element),
                    "voter": index + 1,
                    "improved_profile": [str(voter) for voter in improved.voters],
                    "winners": _rows(winners),
                    "improved_winners": _rows(improved_winners),
                }
            )
            return _violated(axiom, rule, checks, witness)
    if checks == 0:
        return _holds(axiom, rule, 0, vacuous=True)
    return _holds(axiom, rule, checks)


def check_reinforcement(
    rule: BaseRule,
    first: Profile,
    second: Profile,
    strength: str = "strict",
    config: Optional[AggregatorConfig] = None,
) -> AxiomVerdict:
    """F(P+Q) = F(P) & F(Q) (strict) or meets it (weak) whenever F(P) & F(Q) is nonempty."""
    _check_strength(strength)
    axiom = "reinforcement" if strength == "strict" else "weak-reinforcement"
    left = rule.aggregate(first, config).winner_set
    right = rule.aggregate(second, config).winner_set
    common = left & right
    if not common:
        return _holds(axiom, rule, 0, vacuous=True)
    joined = rule.aggregate(first + second, config).winner_set
    ok = joined == common if strength == "strict" else bool(joined & common)
    if ok:
        return _holds(axiom, rule, 1)
    witness = _instance(first)
    witness.update(
        {
            "strength": strength,
            "second_profile": [str(voter) for voter in second.voters],
            "winners": _rows(left),
            "second_winners": _rows(right),
            "joined_winners": _rows(joined),
        }
    )
    return _violated(axiom, rule, 1, witness)


def check_homogeneity(
    rule: BaseRule, profile: Profile, k: int = 2, config: Optional[AggregatorConfig] = None
) -> AxiomVerdict:
    """F(kP) = F(P)."""
    axiom = "homogeneity"
    winners = rule.aggregate(profile, config).winner_set
    replicated = rule.aggregate(profile.replicate(k), config).winner_set
    if winners == replicated:
        return _holds(axiom, rule, 1)
    witness = _instance(profile)
    witness.update({"k": k, "winners": _rows(winners), "replicated_winners": _rows(replicated)})
    return _violated(axiom, rule, 1, witness)


def replay_witness(
    rule: BaseRule, verdict: AxiomVerdict, config: Optional[AggregatorConfig] = None
) -> AxiomVerdict:
    """Rebuild the instance stored in a verdict's witness and run the same check on it."""
    if verdict.witness is None:
        raise ValueError("Only verdicts with a witness can be replayed")
    witness = verdict.witness
    agenda = parse_agenda_text("\n".join(witness["agenda"]), "<witness>", config)

    def profile(key: str) -> Profile:
        return Profile.from_rows(agenda, witness[key])

    axiom = verdict.axiom
    if axiom in ("majority-preservation", "weak-majority-preservation"):
        return check_majority_preservation(rule, profile("profile"), witness["strength"], config)
    if axiom in ("weak-unanimity", "strong-unanimity"):
        return check_unanimity(rule, profile("profile"), witness["strength"], config)
    if axiom == "monotonicity":
        return check_monotonicity(rule, profile("profile"), config)
    if axiom in ("reinforcement", "weak-reinforcement"):
        return check_reinforcement(
            rule, profile("profile"), profile("second_profile"), witness["strength"], config
        )
    if axiom == "homogeneity":
        return check_homogeneity(rule, profile("profile"), witness["k"], config)
    raise ValueError(f"Cannot replay axiom '{axiom}'")

