"""JSON reporting utilities."""

from __future__ import annotations

import json
from collections import Counter
from enum import Enum
from fractions import Fraction
from functools import singledispatch
from pathlib import Path
from typing import Any, Dict, Iterable, List

from ..data_models import (
    AgendaEnumeration,
    AxiomVerdict,
    CorrespondenceResult,
    ExpectationResult,
    FixtureResult,
    JudgmentSet,
    RelationReport,
    RuleOutcome,
)


class JsonReporter:
    """Generate JSON documents from aggregation results.

    Output is a pure function of the results: keys are sorted and nothing
    time-dependent is written.
    """

    def to_dict(self, command: str, results: Any) -> Dict[str, object]:
        data: Dict[str, object] = {"command": command, "results": to_jsonable(results)}
        summary = _summarize(results)
        if summary:
            data["summary"] = summary
        return data

    def dumps(self, command: str, results: Any) -> str:
        return json.dumps(self.to_dict(command, results), indent=2, sort_keys=True) + "\n"

    def write(self, command: str, results: Any, output_path: str | Path) -> None:
        """Write report to JSON file."""
        path = Path(output_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.dumps(command, results), encoding="utf-8")


@singledispatch
def to_jsonable(value: Any) -> Any:
    return value


@to_jsonable.register(dict)
def _mapping_to_json(value: dict) -> Dict[str, Any]:
    return {str(to_jsonable(key)): to_jsonable(item) for key, item in value.items()}


@to_jsonable.register(list)
@to_jsonable.register(tuple)
def _sequence_to_json(value) -> List[Any]:
    return [to_jsonable(item) for item in value]


@to_jsonable.register(JudgmentSet)
def _judgment_to_json(value: JudgmentSet) -> str:
    return str(value)


@to_jsonable.register(Fraction)
def _fraction_to_json(value: Fraction) -> Any:
    return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@to_jsonable.register(Enum)
def _enum_to_json(value: Enum) -> Any:
    return value.value


@to_jsonable.register(RuleOutcome)
def _outcome_to_dict(outcome: RuleOutcome) -> Dict[str, Any]:
    return {
        "rule": outcome.rule_id,
        "winners": outcome.rows(),
        "scores": {str(winner): to_jsonable(score) for winner, score in outcome.scores.items()},
        "witnesses": to_jsonable(outcome.witnesses),
        "details": to_jsonable(outcome.details),
    }


@to_jsonable.register(AxiomVerdict)
def _verdict_to_dict(verdict: AxiomVerdict) -> Dict[str, Any]:
    return {
        "rule": verdict.rule_id,
        "axiom": verdict.axiom,
        "status": verdict.status.value,
        "checks": verdict.checks,
        "seed": verdict.seed,
        "witness": to_jsonable(verdict.witness),
        "details": to_jsonable(verdict.details),
    }


@to_jsonable.register(RelationReport)
def _relation_to_dict(report: RelationReport) -> Dict[str, Any]:
    return {
        "left": report.left,
        "right": report.right,
        "relation": report.relation,
        "instances": report.instances,
        "equal": report.equal,
        "left_in_right": report.left_in_right,
        "right_in_left": report.right_in_left,
        "disjoint": report.disjoint,
        "left_not_in_right_witness": to_jsonable(report.left_not_in_right_witness),
        "right_not_in_left_witness": to_jsonable(report.right_not_in_left_witness),
    }


@to_jsonable.register(ExpectationResult)
def _expectation_to_dict(result: ExpectationResult) -> Dict[str, Any]:
    return {
        "label": result.label,
        "expected": to_jsonable(result.expected),
        "actual": to_jsonable(result.actual),
        "passed": result.passed,
    }


@to_jsonable.register(FixtureResult)
def _fixture_to_dict(result: FixtureResult) -> Dict[str, Any]:
    # replay time is left out so repeated runs give identical documents
    return {
        "fixture": result.fixture_id,
        "locus": result.locus,
        "passed": result.passed,
        "expectations": len(result.expectations),
        "diffs": to_jsonable(result.diffs),
    }


@to_jsonable.register(CorrespondenceResult)
def _correspondence_to_dict(result: CorrespondenceResult) -> Dict[str, Any]:
    return {
        "rule": result.rule_id,
        "constraint": result.constraint,
        "reference": result.reference,
        "kind": result.kind,
        "instances": result.instances,
        "mismatches": result.mismatches,
        "even_mismatches": result.even_mismatches,
        "passed": result.passed,
        "witness": to_jsonable(result.witness),
    }


@to_jsonable.register(AgendaEnumeration)
def _enumeration_to_dict(enumeration: AgendaEnumeration) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "agenda": enumeration.agenda,
        "issues": enumeration.issues,
        "rational_sets": to_jsonable(enumeration.rational),
        "rational_count": len(enumeration.rational),
    }
    if enumeration.voters is not None:
        data.update(
            {
                "voters": enumeration.voters,
                "support": [
                    {"issue": issue, "accept": accept, "reject": reject}
                    for issue, accept, reject in enumeration.support
                ],
                "majority": to_jsonable(enumeration.majority),
                "majority_consistent": enumeration.majority_consistent,
                "distances": {
                    str(voter): row for voter, row in enumeration.distances.items()
                },
            }
        )
    return data


def _summarize(results: Any) -> Dict[str, object]:
    items = results if isinstance(results, list) else []
    if items and all(isinstance(item, AxiomVerdict) for item in items):
        return _summarize_verdicts(items)
    if items and all(isinstance(item, (FixtureResult, CorrespondenceResult)) for item in items):
        return _summarize_passes(items)
    return {}


def _summarize_verdicts(verdicts: Iterable[AxiomVerdict]) -> Dict[str, object]:
    verdicts = list(verdicts)
    status_counter = Counter(verdict.status.value for verdict in verdicts)
    return {
        "total": len(verdicts),
        "by_status": dict(sorted(status_counter.items())),
        "checks": sum(verdict.checks for verdict in verdicts),
    }


def _summarize_passes(results: Iterable[Any]) -> Dict[str, object]:
    results = list(results)
    passed = sum(1 for result in results if result.passed)
    return {"total": len(results), "passed": passed, "failed": len(results) - passed}
