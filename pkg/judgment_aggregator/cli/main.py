"""Command line interface for the Judgment Aggregator."""

from __future__ import annotations

import contextlib
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, Optional, Tuple

import click

from ..agenda import Agenda, AgendaError
from ..axioms.suite import AXIOM_IDS, UnknownAxiomError, expected_to_hold, validate_axiom
from ..bridge.preferences import build_preference_agenda, encode
from ..config import OUTPUT_FORMATS, AggregatorConfig, BudgetExceededError, ConfigurationError
from ..core import JudgmentAggregator
from ..corpus.fixtures import UnknownFixtureError, list_fixtures, load_fixture
from ..data_models import AxiomVerdict
from ..loaders import (
    FileFormatError,
    detect_format,
    load_agenda,
    load_profile,
    parse_agenda_text,
    parse_preference_text,
)
from ..logic.formula import EvaluationError
from ..logic.parser import FormulaSyntaxError
from ..profile import Profile, ProfileError
from ..reporting.json_reporter import JsonReporter
from ..reporting.text_reporter import TextReporter
from ..rules.distance import DistanceSpecError
from ..rules.registry import MAIN_RULE_IDS, UnknownRuleError, get_rule

logger = logging.getLogger(__name__)

INPUT_ERRORS = (
    AgendaError,
    ConfigurationError,
    DistanceSpecError,
    EvaluationError,
    FileFormatError,
    FormulaSyntaxError,
    OSError,
    ProfileError,
    UnknownAxiomError,
    UnknownFixtureError,
    UnknownRuleError,
)


class InputError(click.ClickException):
    """Unreadable or invalid input; exits with status 2."""

    exit_code = 2


class BudgetError(click.ClickException):
    """A configured search budget was exceeded; exits with status 3."""

    exit_code = 3


@dataclass(slots=True)
class RunConfig:
    """Validated settings of one command invocation."""

    command: str
    sources: Tuple[str, ...] = ()
    rule_ids: Tuple[str, ...] = ()
    axioms: Tuple[str, ...] = ()
    seed: Optional[int] = None
    samples: Optional[int] = None
    output_format: Optional[str] = None
    output: Optional[Path] = None
    save: bool = False
    config_path: Optional[Path] = None
    budgets: Dict[str, Optional[int]] = field(default_factory=dict)

    def validate(self) -> None:
        for rule_id in self.rule_ids:
            get_rule(rule_id)
        for axiom in self.axioms:
            validate_axiom(axiom)
        if self.samples is not None and self.samples < 1:
            raise InputError("--samples must be at least 1")
        if self.seed is not None and self.seed < 0:
            raise InputError("--seed must not be negative")
        if self.output_format is not None and self.output_format not in OUTPUT_FORMATS:
            raise InputError(f"Unknown format '{self.output_format}'")

    def load_config(self) -> AggregatorConfig:
        config = AggregatorConfig.from_yaml(self.config_path) if self.config_path else None
        return (config or AggregatorConfig()).with_overrides(**self.budgets)


@contextlib.contextmanager
def _guard() -> Iterator[None]:
    """Turn library errors into exit codes 2 (input) and 3 (budget)."""
    try:
        yield
    except BudgetExceededError as exc:
        raise BudgetError(str(exc)) from exc
    except INPUT_ERRORS as exc:
        raise InputError(str(exc)) from exc


def _run_options(command: Callable[..., Any]) -> Callable[..., Any]:
    options = [
        click.option(
            "--config",
            "config_path",
            type=click.Path(exists=True, dir_okay=False, path_type=Path),
            help="Path to configuration YAML file.",
        ),
        click.option(
            "--format",
            "output_format",
            type=click.Choice(OUTPUT_FORMATS),
            default=None,
            help="Output format (defaults to configuration value).",
        ),
        click.option(
            "--output",
            type=click.Path(dir_okay=False, path_type=Path),
            default=None,
            help="Write the report to this file instead of standard output.",
        ),
        click.option(
            "--save",
            is_flag=True,
            help="Also write the report into the configured output directory.",
        ),
        click.option("--max-atoms", type=click.IntRange(min=1), default=None),
        click.option("--max-issues", type=click.IntRange(min=1), default=None),
        click.option("--mpc-budget", type=click.IntRange(min=1), default=None),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _sampling_options(command: Callable[..., Any]) -> Callable[..., Any]:
    command = click.option("--samples", type=int, default=None, help="Number of instances.")(
        command
    )
    return click.option("--seed", type=int, default=None, help="Random seed.")(command)


def _run_config(command: str, options: Dict[str, Any], **fields: Any) -> RunConfig:
    run = RunConfig(
        command=command,
        output_format=options.get("output_format"),
        output=options.get("output"),
        save=bool(options.get("save")),
        config_path=options.get("config_path"),
        budgets={
            "max_atoms": options.get("max_atoms"),
            "max_issues": options.get("max_issues"),
            "mpc_budget": options.get("mpc_budget"),
        },
        **fields,
    )
    with _guard():
        run.validate()
    return run


def _create_aggregator(run: RunConfig) -> Tuple[JudgmentAggregator, AggregatorConfig]:
    with _guard():
        config = run.load_config()
    return JudgmentAggregator(config), config


def _load_source(
    aggregator: JudgmentAggregator,
    source: str,
    agenda_path: Optional[Path] = None,
    constraint: str = "Tr",
) -> Tuple[Agenda, Optional[Profile]]:
    """Agenda and profile named by ``source``: a file, or a fixture id (its first profile).

    An agenda file gives no profile.
    """
    config = aggregator.config
    path = Path(source)
    if not path.exists():
        if source not in list_fixtures():
            raise UnknownFixtureError(source)
        profile = next(iter(load_fixture(source, config).profiles.values()))
        return profile.agenda, profile
    text = path.read_text(encoding="utf-8")
    kind = detect_format(text)
    if kind == "agenda":
        return parse_agenda_text(text, str(path), config), None
    if kind == "preferences":
        preferences = parse_preference_text(text, str(path))
        agenda = build_preference_agenda(
            preferences.alternatives, constraint, config.budget("max_alternatives")
        )
        return agenda, encode(preferences, agenda)
    agenda = load_agenda(agenda_path, config) if agenda_path else None
    profile = load_profile(path, agenda, config)
    return profile.agenda, profile


def _emit(run: RunConfig, config: AggregatorConfig, results: Any) -> None:
    output_format = run.output_format or config.output_format
    if output_format == "json":
        document = JsonReporter().dumps(run.command, results)
    else:
        document = TextReporter().render(results)
    if run.save:
        suffix = "json" if output_format == "json" else "txt"
        saved = Path(config.output_directory) / f"{run.command}-report.{suffix}"
        saved.parent.mkdir(parents=True, exist_ok=True)
        saved.write_text(document, encoding="utf-8")
        logger.info("report saved to %s", saved)
    if run.output is not None:
        run.output.parent.mkdir(parents=True, exist_ok=True)
        run.output.write_text(document, encoding="utf-8")
        click.echo(f"Report written to {run.output}")
    else:
        click.echo(document, nl=False)


def _fail_if(condition: bool) -> None:
    if condition:
        click.get_current_context().exit(1)


@click.group()
@click.option("--verbose", is_flag=True, help="Log search progress to standard error.")
def app(verbose: bool) -> None:
    """Judgment Aggregator CLI."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


@app.command("aggregate")
@click.argument("source")
@click.option("--rule", "rule_ids", multiple=True, help="Rule identifier (repeatable).")
@click.option(
    "--agenda",
    "agenda_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Agenda file, overriding the profile's 'agenda:' header.",
)
@click.option("--constraint", type=click.Choice(["Tr", "W"]), default="Tr")
@_run_options
def aggregate_command(
    source: str,
    rule_ids: Tuple[str, ...],
    agenda_path: Optional[Path],
    constraint: str,
    **options: Any,
) -> None:
    """Apply rules to a profile file, preference file or fixture id."""
    run = _run_config(
        "aggregate", options, sources=(source,), rule_ids=rule_ids or tuple(MAIN_RULE_IDS)
    )
    aggregator, config = _create_aggregator(run)
    with _guard():
        _, profile = _load_source(aggregator, source, agenda_path, constraint)
        if profile is None:
            raise InputError(f"{source} is an agenda file; a profile is needed")
        outcomes = aggregator.aggregate(profile, run.rule_ids)
    _emit(run, config, outcomes)


@app.command("axioms")
@click.option("--rule", "rule_ids", multiple=True, help="Rule identifier (repeatable).")
@click.option("--check", "axioms", multiple=True, help="Axiom identifier (repeatable).")
@click.option("--fixture", "fixture_id", default=None, help="Check on a fixture's profiles.")
@click.option("--search", is_flag=True, help="Search preference agendas for a witness.")
@_sampling_options
@_run_options
def axioms_command(
    rule_ids: Tuple[str, ...],
    axioms: Tuple[str, ...],
    fixture_id: Optional[str],
    search: bool,
    seed: Optional[int],
    samples: Optional[int],
    **options: Any,
) -> None:
    """Check axioms; exits 1 when a rule violates an axiom it is known to satisfy."""
    run = _run_config(
        "axioms",
        options,
        rule_ids=rule_ids or tuple(MAIN_RULE_IDS),
        axioms=axioms or AXIOM_IDS,
        seed=seed,
        samples=samples,
    )
    aggregator, config = _create_aggregator(run)
    with _guard():
        verdicts = aggregator.check_axioms(
            run.rule_ids, run.axioms, samples, seed, fixture_id=fixture_id, search=search
        )
    _emit(run, config, verdicts)
    _fail_if(any(_unexpected(verdict) for verdict in verdicts))


def _unexpected(verdict: AxiomVerdict) -> bool:
    return verdict.violated and expected_to_hold(verdict.rule_id, verdict.axiom)


@app.command("compare")
@click.option("--rules", "rule_pair", required=True, help="Two rule ids: 'left,right'.")
@click.option("--corpus/--no-corpus", default=True, help="Include the fixture profiles.")
@click.option(
    "--expect-within",
    is_flag=True,
    help="Exit 1 when the left rule ever selects a set the right rule does not.",
)
@_sampling_options
@_run_options
def compare_command(
    rule_pair: str,
    corpus: bool,
    expect_within: bool,
    seed: Optional[int],
    samples: Optional[int],
    **options: Any,
) -> None:
    """Report the observed inclusion relation between two rules."""
    names = tuple(part.strip() for part in rule_pair.split(",") if part.strip())
    if len(names) != 2:
        raise InputError("--rules takes exactly two rule ids, e.g. 'ra,mc'")
    run = _run_config("compare", options, rule_ids=names, seed=seed, samples=samples)
    aggregator, config = _create_aggregator(run)
    with _guard():
        report = aggregator.compare(names[0], names[1], samples, seed, corpus)
    _emit(run, config, report)
    _fail_if(expect_within and report.left_not_in_right_witness is not None)


@app.command("fixtures")
@click.argument("fixture_ids", nargs=-1)
@click.option("--all", "run_all", is_flag=True, help="Replay every fixture (the default).")
@click.option("--list", "list_only", is_flag=True, help="Only list fixture ids.")
@_run_options
def fixtures_command(
    fixture_ids: Tuple[str, ...], run_all: bool, list_only: bool, **options: Any
) -> None:
    """Replay corpus fixtures; exits 1 on any diff."""
    if list_only:
        for fixture_id in list_fixtures():
            click.echo(fixture_id)
        return
    run = _run_config("fixtures", options, sources=() if run_all else fixture_ids)
    aggregator, config = _create_aggregator(run)
    with _guard():
        results = aggregator.run_fixtures(run.sources or None)
    _emit(run, config, results)
    _fail_if(not all(result.passed for result in results))


@app.command("bridge")
@click.argument(
    "preferences",
    required=False,
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
)
@click.option("--alternatives", type=click.IntRange(min=2), default=3, show_default=True)
@click.option("--voters", type=click.IntRange(min=1), default=3, show_default=True)
@_run_options
def bridge_command(
    preferences: Optional[Path], alternatives: int, voters: int, **options: Any
) -> None:
    """Voting-rule outputs for a preference file, or an exhaustive correspondence sweep."""
    run = _run_config("bridge", options, sources=(str(preferences),) if preferences else ())
    aggregator, config = _create_aggregator(run)
    with _guard():
        if preferences is not None:
            report = aggregator.bridge_file(preferences)
            checks = report["checks"]
            _emit(run, config, report)
        else:
            checks = aggregator.bridge_sweep(alternatives, voters)
            _emit(run, config, checks)
    _fail_if(not all(result.passed for result in checks))


@app.command("enumerate")
@click.argument("source")
@click.option(
    "--agenda",
    "agenda_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Agenda file, overriding the profile's 'agenda:' header.",
)
@click.option("--constraint", type=click.Choice(["Tr", "W"]), default="Tr")
@_run_options
def enumerate_command(
    source: str, agenda_path: Optional[Path], constraint: str, **options: Any
) -> None:
    """Dump the rational sets, and for a profile N(P, .) and m(P)."""
    run = _run_config("enumerate", options, sources=(source,))
    aggregator, config = _create_aggregator(run)
    with _guard():
        agenda, profile = _load_source(aggregator, source, agenda_path, constraint)
        enumeration = aggregator.enumerate(agenda, profile)
    _emit(run, config, enumeration)
