"""Axiom checkers, instance generators and rule comparison."""

from .checkers import (
    check_homogeneity,
    check_majority_preservation,
    check_monotonicity,
    check_reinforcement,
    check_unanimity,
    classify_improvement,
    phi_improvements,
    replay_witness,
)
from .compare import compare_rules
from .generators import InstanceGenerator, exhaustive_profiles
from .suite import (
    AXIOM_IDS,
    EXPECTED_TO_HOLD,
    UnknownAxiomError,
    run_axiom_check,
    sampled_verdict,
    search_majority_violation,
    search_violation,
)

__all__ = [
    "AXIOM_IDS",
    "EXPECTED_TO_HOLD",
    "InstanceGenerator",
    "UnknownAxiomError",
    "check_homogeneity",
    "check_majority_preservation",
    "check_monotonicity",
    "check_reinforcement",
    "check_unanimity",
    "classify_improvement",
    "compare_rules",
    "exhaustive_profiles",
    "phi_improvements",
    "replay_witness",
    "run_axiom_check",
    "sampled_verdict",
    "search_majority_violation",
    "search_violation",
]
