"""Data models used by the Judgment Aggregator."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

POS = 1
NEG = -1
UNDECIDED = 0

_SIGN_CHARS = {"+": POS, "-": NEG, "−": NEG, "?": UNDECIDED}
_SIGN_TEXT = {POS: "+", NEG: "-", UNDECIDED: "?"}

# An agenda element: (issue index, sign). (i, POS) is the i-th issue, (i, NEG) its negation.
Element = Tuple[int, int]
Score = Union[int, Fraction]


@dataclass(frozen=True, slots=True)
class JudgmentSet:
    """Sign vector over the issues of an agenda (+ accept, - reject, ? undecided)."""

    signs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if any(sign not in (POS, NEG, UNDECIDED) for sign in self.signs):
            raise ValueError(f"Invalid sign vector: {self.signs!r}")

    @classmethod
    def from_text(cls, text: str) -> "JudgmentSet":
        """Parse ``"+ - ?"`` or ``"+-?"`` into a judgment set."""
        compact = "".join(text.split())
        try:
            return cls(tuple(_SIGN_CHARS[char] for char in compact))
        except KeyError as exc:
            raise ValueError(f"Invalid judgment row: {text!r}") from exc

    @classmethod
    def from_elements(cls, size: int, elements: Iterable[Element]) -> "JudgmentSet":
        signs = [UNDECIDED] * size
        for issue, sign in elements:
            if signs[issue] not in (UNDECIDED, sign):
                raise ValueError(f"Issue {issue} decided both ways")
            signs[issue] = sign
        return cls(tuple(signs))

    @classmethod
    def undecided(cls, size: int) -> "JudgmentSet":
        return cls((UNDECIDED,) * size)

    def __len__(self) -> int:
        return len(self.signs)

    def __str__(self) -> str:
        return "".join(_SIGN_TEXT[sign] for sign in self.signs)

    @property
    def is_complete(self) -> bool:
        return UNDECIDED not in self.signs

    @property
    def sort_key(self) -> Tuple[int, ...]:
        # + sorts before -, undecided last
        return tuple(0 if sign == POS else 1 if sign == NEG else 2 for sign in self.signs)

    def elements(self) -> FrozenSet[Element]:
        return frozenset(
            (issue, sign) for issue, sign in enumerate(self.signs) if sign != UNDECIDED
        )

    def contains(self, element: Element) -> bool:
        issue, sign = element
        return self.signs[issue] == sign

    def agrees_with(self, other: "JudgmentSet") -> bool:
        """True when ``other`` carries every decided sign of this set."""
        return all(
            sign == UNDECIDED or sign == theirs for sign, theirs in zip(self.signs, other.signs)
        )

    def with_sign(self, issue: int, sign: int) -> "JudgmentSet":
        signs = list(self.signs)
        signs[issue] = sign
        return JudgmentSet(tuple(signs))


def sort_sets(sets: Iterable[JudgmentSet]) -> List[JudgmentSet]:
    """Deduplicate and order judgment sets lexicographically (+ before -)."""
    return sorted(set(sets), key=lambda judgment: judgment.sort_key)


def element_key(element: Element) -> Tuple[int, int]:
    issue, sign = element
    return issue, 0 if sign == POS else 1


def sort_elements(elements: Iterable[Element]) -> List[Element]:
    return sorted(set(elements), key=element_key)


@dataclass(slots=True)
class RuleDefinition:
    """Definition metadata for an aggregation rule."""

    rule_id: str
    name: str
    family: str
    description: str = ""


@dataclass(slots=True)
class RuleOutcome:
    """Nonempty set of rational judgment sets returned by a rule, plus metadata."""

    rule_id: str
    winners: List[JudgmentSet]
    scores: Dict[JudgmentSet, Score] = field(default_factory=dict)
    witnesses: List[Dict[str, Any]] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def winner_set(self) -> FrozenSet[JudgmentSet]:
        return frozenset(self.winners)

    def rows(self) -> List[str]:
        return [str(winner) for winner in self.winners]


class AxiomStatus(str, Enum):
    """Outcome of an axiom check."""

    HOLDS = "holds-on-sample"
    VIOLATED = "violated"
    INCONCLUSIVE = "inconclusive"


@dataclass(slots=True)
class AxiomVerdict:
    """Result of checking one axiom for one rule."""

    axiom: str
    rule_id: str
    status: AxiomStatus
    witness: Optional[Dict[str, Any]] = None
    checks: int = 0
    seed: Optional[int] = None
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def violated(self) -> bool:
        return self.status == AxiomStatus.VIOLATED


@dataclass(slots=True)
class RelationReport:
    """Observed inclusion relationship between two rules over a set of instances."""

    left: str
    right: str
    instances: int = 0
    equal: int = 0
    left_in_right: int = 0
    right_in_left: int = 0
    left_not_in_right_witness: Optional[Dict[str, Any]] = None
    right_not_in_left_witness: Optional[Dict[str, Any]] = None
    disjoint: int = 0

    @property
    def relation(self) -> str:
        left_escapes = self.left_not_in_right_witness is not None
        right_escapes = self.right_not_in_left_witness is not None
        if left_escapes and right_escapes:
            return "incomparable"
        if left_escapes:
            return "superset"
        if right_escapes:
            return "subset"
        return "equal"


@dataclass(slots=True)
class ExpectationResult:
    """One replayed expectation of a fixture."""

    label: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass(slots=True)
class FixtureResult:
    """Replay report for one corpus fixture."""

    fixture_id: str
    locus: str
    expectations: List[ExpectationResult]
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.expectations)

    @property
    def diffs(self) -> List[ExpectationResult]:
        return [result for result in self.expectations if not result.passed]


@dataclass(slots=True)
class CorrespondenceResult:
    """Agreement between a judgment rule on a preference agenda and a voting rule."""

    rule_id: str
    constraint: str
    reference: str
    kind: str
    instances: int = 0
    mismatches: int = 0
    even_mismatches: int = 0
    witness: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.mismatches == 0


@dataclass(slots=True)
class AgendaEnumeration:
    """Rational sets of an agenda and, given a profile, its support table and majority."""

    agenda: str
    issues: List[str]
    rational: List[JudgmentSet]
    voters: Optional[int] = None
    support: List[Tuple[str, int, int]] = field(default_factory=list)
    majority: Optional[JudgmentSet] = None
    majority_consistent: Optional[bool] = None
    # Hamming distance from each distinct voter set to every rational set.
    distances: Dict[JudgmentSet, List[int]] = field(default_factory=dict)
