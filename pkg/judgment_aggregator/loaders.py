"""Readers for the agenda, profile and preference-profile text formats.

Agenda file::

    constraint: q -> r        (or a line "extensional")
    p & r
    q
    p & q
    sets:                     (extensional agendas only)
    + + +
    - + -

Profile file::

    agenda: example.agenda
    + + + + + x6
    - - + - -

Preference file::

    alternatives: a b c
    a > b > c x2
    b > c > a
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .agenda import Agenda, AgendaError
from .bridge.preferences import PreferenceProfile
from .config import AggregatorConfig
from .data_models import JudgmentSet
from .logic.formula import TOP, Formula, to_text
from .logic.parser import FormulaSyntaxError, parse_formula
from .profile import Profile, ProfileError


class FileFormatError(ValueError):
    """Raised when an input file does not follow its documented format."""

    def __init__(self, source: str, line: int, message: str) -> None:
        self.source = source
        self.line = line
        super().__init__(f"{source}:{line}: {message}")


_MULTIPLICITY = re.compile(r"^(?P<row>.*?)\s+x(?P<count>\d+)$")


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def _split_multiplicity(source: str, number: int, line: str) -> Tuple[str, int]:
    match = _MULTIPLICITY.match(line)
    if match is None:
        return line, 1
    count = int(match.group("count"))
    if count < 1:
        raise FileFormatError(source, number, "multiplicity must be at least 1")
    return match.group("row"), count


def parse_agenda_text(
    text: str, source: str = "<agenda>", config: Optional[AggregatorConfig] = None
) -> Agenda:
    """Parse the agenda format into an :class:`Agenda`."""
    config = config or AggregatorConfig()
    lines = _content_lines(text)
    if not lines:
        raise FileFormatError(source, 1, "empty agenda file")

    number, header = lines[0]
    constraint: Optional[Formula] = None
    extensional = False
    if header == "extensional":
        extensional = True
    elif header.startswith("constraint:"):
        constraint = _formula(source, number, header.split(":", 1)[1]) or TOP
    else:
        raise FileFormatError(source, number, "expected 'constraint: <formula>' or 'extensional'")

    issues: List[Formula] = []
    rows: List[JudgmentSet] = []
    in_sets = False
    for number, line in lines[1:]:
        if line == "sets:":
            if not extensional:
                raise FileFormatError(source, number, "'sets:' block needs an extensional agenda")
            in_sets = True
            continue
        if in_sets:
            rows.append(_judgment(source, number, line))
        else:
            formula = _formula(source, number, line)
            if formula is None:
                raise FileFormatError(source, number, "empty issue")
            issues.append(formula)
    if extensional and not rows:
        raise FileFormatError(source, lines[-1][0], "extensional agenda without a 'sets:' block")

    try:
        return Agenda(
            issues,
            constraint=None if extensional else constraint,
            rational=rows if extensional else None,
            name=Path(source).stem,
            max_atoms=config.budget("max_atoms"),
            max_issues=config.budget("max_issues"),
        )
    except AgendaError as exc:
        raise FileFormatError(source, number, str(exc)) from exc


def _formula(source: str, number: int, text: str) -> Optional[Formula]:
    if not text.strip():
        return None
    try:
        return parse_formula(text)
    except FormulaSyntaxError as exc:
        raise FileFormatError(source, number, str(exc)) from exc


def _judgment(source: str, number: int, text: str) -> JudgmentSet:
    try:
        return JudgmentSet.from_text(text)
    except ValueError as exc:
        raise FileFormatError(source, number, str(exc)) from exc


def format_agenda(agenda: Agenda) -> str:
    """Render ``agenda`` in the agenda file format; parsing the text gives it back."""
    if agenda.declared is not None:
        lines = ["extensional"]
    else:
        lines = [f"constraint: {to_text(agenda.constraint)}"]
    lines.extend(to_text(issue) for issue in agenda.issues)
    if agenda.declared is not None:
        lines.append("sets:")
        lines.extend(" ".join(str(judgment)) for judgment in agenda.declared)
    return "\n".join(lines) + "\n"


def load_agenda(path: str | Path, config: Optional[AggregatorConfig] = None) -> Agenda:
    agenda_path = Path(path)
    return parse_agenda_text(agenda_path.read_text(encoding="utf-8"), str(agenda_path), config)


def parse_profile_text(text: str, agenda: Agenda, source: str = "<profile>") -> Profile:
    """Parse profile rows (after an optional ``agenda:`` header) against ``agenda``."""
    voters: List[JudgmentSet] = []
    for number, line in _content_lines(text):
        if line.startswith("agenda:"):
            continue
        row, count = _split_multiplicity(source, number, line)
        judgment = _judgment(source, number, row)
        if len(judgment) != len(agenda) or not agenda.is_rational(judgment):
            raise FileFormatError(source, number, f"row {judgment} is not a rational set")
        voters.extend([judgment] * count)
    try:
        return Profile(agenda, voters)
    except ProfileError as exc:
        raise FileFormatError(source, 1, str(exc)) from exc


def detect_format(text: str) -> str:
    """``preferences``, ``profile`` or ``agenda``, judged from the first content line."""
    lines = _content_lines(text)
    first = lines[0][1] if lines else ""
    if first.startswith("alternatives:"):
        return "preferences"
    if first.startswith("agenda:"):
        return "profile"
    if first == "extensional" or first.startswith("constraint:"):
        return "agenda"
    return "profile"


def profile_header(text: str) -> Optional[str]:
    for _, line in _content_lines(text):
        if line.startswith("agenda:"):
            return line.split(":", 1)[1].strip()
    return None


def load_profile(
    path: str | Path,
    agenda: Optional[Agenda] = None,
    config: Optional[AggregatorConfig] = None,
    agenda_cache: Optional[Dict[Path, Agenda]] = None,
) -> Profile:
    """Load a profile; the agenda comes from the argument or from the file header."""
    profile_path = Path(path)
    text = profile_path.read_text(encoding="utf-8")
    if agenda is None:
        reference = profile_header(text)
        if reference is None:
            raise FileFormatError(str(profile_path), 1, "missing 'agenda:' header")
        agenda_path = (profile_path.parent / reference).resolve()
        cache = agenda_cache if agenda_cache is not None else {}
        if agenda_path not in cache:
            cache[agenda_path] = load_agenda(agenda_path, config)
        agenda = cache[agenda_path]
    return parse_profile_text(text, agenda, str(profile_path))


def parse_preference_text(text: str, source: str = "<preferences>") -> PreferenceProfile:
    """Parse alternatives and voter rankings (best first)."""
    lines = _content_lines(text)
    if not lines or not lines[0][1].startswith("alternatives:"):
        raise FileFormatError(source, lines[0][0] if lines else 1, "expected 'alternatives:' line")
    alternatives = tuple(lines[0][1].split(":", 1)[1].split())
    if len(alternatives) < 2 or len(set(alternatives)) != len(alternatives):
        raise FileFormatError(source, lines[0][0], "need at least two distinct alternatives")
    orders: List[Tuple[str, ...]] = []
    for number, line in lines[1:]:
        row, count = _split_multiplicity(source, number, line)
        order = tuple(part.strip() for part in row.split(">"))
        if sorted(order) != sorted(alternatives):
            names = " ".join(alternatives)
            raise FileFormatError(source, number, f"'{row}' is not a ranking of {names}")
        orders.extend([order] * count)
    if not orders:
        raise FileFormatError(source, lines[-1][0], "no voters")
    return PreferenceProfile(alternatives, tuple(orders))


def load_preferences(path: str | Path) -> PreferenceProfile:
    preference_path = Path(path)
    return parse_preference_text(preference_path.read_text(encoding="utf-8"), str(preference_path))
