"""Axiom checks over instance streams: samples, exhaustive sweeps and fixture profiles."""

from __future__ import annotations

import itertools
import logging
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Sequence, Tuple

from ..bridge.preferences import build_preference_agenda, encode
from ..bridge.voting import all_preference_profiles
from ..config import AggregatorConfig
from ..data_models import AxiomStatus, AxiomVerdict
from ..profile import Profile
from ..rules.base import BaseRule
from ..rules.registry import get_rule
from .checkers import (
    check_homogeneity,
    check_majority_preservation,
    check_monotonicity,
    check_reinforcement,
    check_unanimity,
)
from .generators import InstanceGenerator

logger = logging.getLogger(__name__)

AXIOM_IDS = (
    "majority-preservation",
    "weak-majority-preservation",
    "weak-unanimity",
    "strong-unanimity",
    "monotonicity",
    "reinforcement",
    "weak-reinforcement",
    "homogeneity",
)

_MAJORITY_PRESERVING = frozenset({"mc", "mcc", "med", "ra", "leximax", "young", "mpc"})
_SUM_RULES = frozenset({"med", "frev", "dsum-hamming", "dsum-geodesic"})

# Rules known to satisfy each axiom; a violation here is a defect, not a finding.
EXPECTED_TO_HOLD: Dict[str, FrozenSet[str]] = {
    "majority-preservation": _MAJORITY_PRESERVING,
    "weak-majority-preservation": _MAJORITY_PRESERVING,
    "weak-unanimity": frozenset({"mc", "ra", "leximax", "young"}),
    "strong-unanimity": frozenset({"ra", "leximax", "young"}),
    "monotonicity": frozenset(
        {"mc", "mcc", "med", "ra", "leximax", "young", "dmax-hamming", "dsum-geodesic"}
    ),
    "reinforcement": _SUM_RULES,
    "weak-reinforcement": _SUM_RULES,
    "homogeneity": _SUM_RULES | frozenset({"mc", "mcc", "ra", "leximax", "dmax-hamming"}),
}

Instance = Tuple


class UnknownAxiomError(ValueError):
    """Raised when an axiom identifier is not one of ``AXIOM_IDS``."""

    def __init__(self, axiom: str) -> None:
        self.axiom = axiom
        super().__init__(f"Unknown axiom '{axiom}'; expected one of {', '.join(AXIOM_IDS)}")


def validate_axiom(axiom: str) -> str:
    if axiom not in AXIOM_IDS:
        raise UnknownAxiomError(axiom)
    return axiom


def expected_to_hold(rule_id: str, axiom: str) -> bool:
    return rule_id in EXPECTED_TO_HOLD[validate_axiom(axiom)]


def check_instance(
    rule: BaseRule, axiom: str, instance: Instance, config: Optional[AggregatorConfig] = None
) -> AxiomVerdict:
    """Run one axiom check; ``instance`` is (P,), (P, Q) for reinforcement or (P, k)."""
    validate_axiom(axiom)
    if axiom == "majority-preservation":
        return check_majority_preservation(rule, instance[0], "strict", config)
    if axiom == "weak-majority-preservation":
        return check_majority_preservation(rule, instance[0], "weak", config)
    if axiom.endswith("unanimity"):
        return check_unanimity(rule, instance[0], axiom.split("-")[0], config)
    if axiom == "monotonicity":
        return check_monotonicity(rule, instance[0], config)
    if axiom.endswith("reinforcement"):
        strength = "weak" if axiom.startswith("weak") else "strict"
        return check_reinforcement(rule, instance[0], instance[1], strength, config)
    k = instance[1] if len(instance) > 1 else 2
    return check_homogeneity(rule, instance[0], k, config)


def run_axiom_check(
    rule: BaseRule,
    axiom: str,
    instances: Iterable[Instance],
    config: Optional[AggregatorConfig] = None,
    seed: Optional[int] = None,
    target: Optional[int] = None,
) -> AxiomVerdict:
    """Check instances until the first violation, the end of the stream, or ``target``
    non-vacuous instances.
    """
    validate_axiom(axiom)
    checks = 0
    count = 0
    informative = 0
    for instance in instances:
        count += 1
        verdict = check_instance(rule, axiom, instance, config)
        checks += verdict.checks
        if not verdict.details.get("vacuous"):
            informative += 1
        if verdict.violated:
            verdict.checks = checks
            verdict.seed = seed
            verdict.details["instance"] = count
            logger.debug("%s violates %s at instance %d", rule.rule_id, axiom, count)
            return verdict
        if target is not None and informative >= target:
            break
    logger.debug("%s: %s held on %d instances (%d checks)", rule.rule_id, axiom, count, checks)
    if target is not None and informative < target:
        logger.warning(
            "%s: only %d of %d %s instances were non-vacuous after %d attempts",
            rule.rule_id,
            informative,
            target,
            axiom,
            count,
        )
    return AxiomVerdict(
        axiom=axiom,
        rule_id=rule.rule_id,
        status=AxiomStatus.HOLDS,
        checks=checks,
        seed=seed,
        details={"instances": count, "informative": informative},
    )


def sample_instances(
    axiom: str, generator: InstanceGenerator, samples: int
) -> Iterator[Instance]:
    """Random instances suited to ``axiom``."""
    validate_axiom(axiom)
    for _ in range(samples):
        if axiom.endswith("majority-preservation"):
            yield (generator.majority_consistent_profile(),)
        elif axiom.endswith("reinforcement"):
            yield generator.profile_pair()
        elif axiom == "homogeneity":
            yield (generator.random_instance(), generator.rng.randint(2, 3))
        else:
            yield (generator.random_instance(),)


def sampled_verdict(
    rule: BaseRule,
    axiom: str,
    config: Optional[AggregatorConfig] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> AxiomVerdict:
    """Sample until ``samples`` instances were non-vacuous, within the configured attempt cap."""
    config = config or AggregatorConfig()
    generator = InstanceGenerator.from_config(config, seed)
    count = config.sampling["samples"] if samples is None else samples
    attempts = count * config.sampling["attempt_factor"]
    return run_axiom_check(
        rule,
        axiom,
        sample_instances(axiom, generator, attempts),
        config,
        generator.seed,
        target=count,
    )


def profile_instances(axiom: str, profiles: Sequence[Profile]) -> Iterator[Instance]:
    """Instances built from given profiles (for example those of a fixture).

    Reinforcement pairs every two profiles over the same agenda, or a profile with
    itself when it is alone; homogeneity doubles each profile.
    """
    validate_axiom(axiom)
    if axiom.endswith("reinforcement"):
        pairs = [
            (first, second)
            for first, second in itertools.combinations(profiles, 2)
            if first.agenda is second.agenda
        ]
        yield from pairs or [(profile, profile) for profile in profiles]
    elif axiom == "homogeneity":
        for profile in profiles:
            yield (profile, 2)
    else:
        for profile in profiles:
            yield (profile,)


def search_majority_violation(
    rule_id: str = "frev",
    strength: str = "strict",
    alternatives: Sequence[str] = ("a", "b", "c"),
    voters: Sequence[int] = (3, 5),
    config: Optional[AggregatorConfig] = None,
) -> AxiomVerdict:
    """Exhaustive search for a majority-preservation failure on a transitive preference agenda."""
    config = config or AggregatorConfig()
    rule = get_rule(rule_id)
    agenda = build_preference_agenda(alternatives, "Tr", config.budget("max_alternatives"))
    axiom = "majority-preservation" if strength == "strict" else "weak-majority-preservation"
    profiles = (
        (encode(preferences, agenda),)
        for n in voters
        for preferences in all_preference_profiles(alternatives, n, ordered=False)
    )
    return run_axiom_check(rule, axiom, profiles, config)


def search_violation(
    rule_id: str,
    axiom: str,
    config: Optional[AggregatorConfig] = None,
    attempts: Optional[int] = None,
    seed: Optional[int] = None,
    constraint: str = "Tr",
) -> AxiomVerdict:
    """Randomized search for a witness over preference agendas.

    Used where no fixture exhibits the violation. Reports ``inconclusive`` when the
    attempts run out without a witness.
    """
    config = config or AggregatorConfig()
    validate_axiom(axiom)
    rule = get_rule(rule_id)
    generator = InstanceGenerator.from_config(config, seed)
    count = config.sampling["samples"] if attempts is None else attempts
    agendas = {
        size: build_preference_agenda(
            tuple("abcd"[:size]), constraint, config.budget("max_alternatives")
        )
        for size in (3, 4)
    }

    def instances() -> Iterator[Instance]:
        for _ in range(count):
            size = generator.rng.choice((3, 4))
            agenda = agendas[size]
            alternatives = tuple("abcd"[:size])
            n = generator.rng.randint(2, generator.max_voters)
            profile = encode(generator.random_preferences(alternatives, n), agenda)
            if axiom.endswith("reinforcement"):
                other = encode(generator.random_preferences(alternatives, n), agenda)
                yield (profile, other)
            elif axiom == "homogeneity":
                yield (profile, generator.rng.randint(2, 3))
            else:
                yield (profile,)

    verdict = run_axiom_check(rule, axiom, instances(), config, generator.seed)
    if verdict.violated:
        return verdict
    logger.warning(
        "No %s witness for %s after %d attempts (seed %d)", axiom, rule_id, count, generator.seed
    )
    verdict.status = AxiomStatus.INCONCLUSIVE
    return verdict
