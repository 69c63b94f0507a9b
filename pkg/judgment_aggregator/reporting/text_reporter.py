"""Plain-text rendering of aggregation results."""

from __future__ import annotations

from functools import singledispatchmethod
from typing import Any, Dict, List

from ..data_models import (
    AgendaEnumeration,
    AxiomVerdict,
    CorrespondenceResult,
    FixtureResult,
    RelationReport,
    RuleOutcome,
)
from .json_reporter import to_jsonable


class TextReporter:
    """Human-readable reports; winner rows appear in sign-vector order."""

    def render(self, results: Any) -> str:
        if isinstance(results, list):
            blocks = [self.block(item) for item in results]
        else:
            blocks = [self.block(results)]
        return "\n\n".join(blocks) + "\n"

    @singledispatchmethod
    def block(self, item: Any) -> str:
        return str(to_jsonable(item))

    @block.register
    def _outcome(self, outcome: RuleOutcome) -> str:
        lines = [f"[{outcome.rule_id}] {len(outcome.winners)} winner(s)"]
        for winner in outcome.winners:
            score = outcome.scores.get(winner)
            suffix = "" if score is None else f"  score {to_jsonable(score)}"
            lines.append(f"  {winner}{suffix}")
        for key, value in sorted(outcome.details.items()):
            lines.append(f"  {key}: {to_jsonable(value)}")
        return "\n".join(lines)

    @block.register
    def _verdict(self, verdict: AxiomVerdict) -> str:
        line = f"{verdict.rule_id:<14} {verdict.axiom:<28} {verdict.status.value}"
        line += f"  ({verdict.checks} checks"
        line += ")" if verdict.seed is None else f", seed {verdict.seed})"
        if verdict.witness is None:
            return line
        return "\n".join([line, *_indent(_witness_lines(verdict.witness))])

    @block.register
    def _relation(self, report: RelationReport) -> str:
        lines = [
            f"{report.left} vs {report.right}: {report.relation} over {report.instances} instances",
            f"  equal {report.equal}, {report.left} within {report.right} {report.left_in_right}, "
            f"{report.right} within {report.left} {report.right_in_left}, "
            f"disjoint {report.disjoint}",
        ]
        for title, witness in (
            (f"{report.left} not within {report.right}", report.left_not_in_right_witness),
            (f"{report.right} not within {report.left}", report.right_not_in_left_witness),
        ):
            if witness is not None:
                lines.append(f"  witness, {title}:")
                lines.extend(_indent(_witness_lines(witness), 4))
        return "\n".join(lines)

    @block.register
    def _fixture(self, result: FixtureResult) -> str:
        status = "PASS" if result.passed else "FAIL"
        lines = [
            f"{status} {result.fixture_id} ({result.locus}): "
            f"{len(result.expectations)} expectations, {result.seconds:.2f}s"
        ]
        for diff in result.diffs:
            lines.append(f"  {diff.label}: expected {diff.expected!r}, got {diff.actual!r}")
        return "\n".join(lines)

    @block.register
    def _correspondence(self, result: CorrespondenceResult) -> str:
        status = "PASS" if result.passed else "FAIL"
        line = (
            f"{status} {result.rule_id}+{result.constraint} ~ {result.reference} "
            f"[{result.kind}]: {result.instances} instances, {result.mismatches} mismatches"
        )
        if result.even_mismatches:
            line += f", {result.even_mismatches} on even electorates"
        if result.witness is None:
            return line
        return "\n".join([line, *_indent(_witness_lines(result.witness))])

    @block.register
    def _enumeration(self, enumeration: AgendaEnumeration) -> str:
        lines = [f"agenda {enumeration.agenda or '<unnamed>'}: {len(enumeration.issues)} issues"]
        lines.extend(f"  {index + 1}. {issue}" for index, issue in enumerate(enumeration.issues))
        lines.append(f"rational sets ({len(enumeration.rational)}):")
        lines.extend(f"  {judgment}" for judgment in enumeration.rational)
        if enumeration.voters is not None:
            lines.append(f"support over {enumeration.voters} voters (accept / reject):")
            lines.extend(
                f"  {issue}: {accept} / {reject}" for issue, accept, reject in enumeration.support
            )
            consistency = "consistent" if enumeration.majority_consistent else "inconsistent"
            lines.append(f"m(P) = {enumeration.majority} ({consistency})")
            if enumeration.distances:
                lines.append("Hamming distance to each rational set:")
                lines.extend(
                    f"  {voter}: {' '.join(str(value) for value in row)}"
                    for voter, row in enumeration.distances.items()
                )
        return "\n".join(lines)

    @block.register
    def _mapping(self, report: dict) -> str:
        return "\n".join(_witness_lines(report))


def _witness_lines(witness: Dict[str, Any]) -> List[str]:
    lines = []
    for key, value in witness.items():
        value = to_jsonable(value)
        if isinstance(value, list) and value and all(isinstance(item, str) for item in value):
            lines.append(f"{key}:")
            lines.extend(f"  {item}" for item in value)
        elif isinstance(value, list) and value and all(isinstance(item, dict) for item in value):
            lines.append(f"{key}:")
            for item in value:
                lines.extend(_indent(_witness_lines(item)))
        elif isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(_indent(_witness_lines(value)))
        else:
            lines.append(f"{key}: {value}")
    return lines


def _indent(lines: List[str], width: int = 2) -> List[str]:
    return [" " * width + line for line in lines]
