"""Configuration handling for the Judgment Aggregator."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Mapping, MutableMapping, Optional

import yaml


class ConfigurationError(Exception):
    """Raised when configuration cannot be loaded or is invalid."""


class BudgetExceededError(Exception):
    """Raised when an instance is larger than a configured search budget."""

    def __init__(self, budget: str, limit: int, required: int) -> None:
        self.budget = budget
        self.limit = limit
        self.required = required
        super().__init__(f"Budget '{budget}' exceeded: need {required}, limit is {limit}.")


DEFAULT_BUDGETS: Dict[str, int] = {
    "max_atoms": 24,
    "max_issues": 20,
    "max_alternatives": 5,
    "mpc_budget": 64,
    "ra_tie_group": 8,
    "max_profiles": 200_000,
}

DEFAULT_SAMPLING: Dict[str, Any] = {
    "seed": 7,
    "samples": 1000,
    "min_issues": 2,
    "max_issues": 4,
    "atoms": ("p", "q", "r", "s"),
    "min_voters": 1,
    "max_voters": 7,
    "constraint_probability": 0.5,
    "attempt_factor": 4,
}

DEFAULT_REPORTING: Dict[str, Any] = {
    "output_format": "text",
    "output_directory": "./aggregation_reports",
}

OUTPUT_FORMATS = ("text", "json")


@dataclass(slots=True)
class AggregatorConfig:
    """Configuration model for the Judgment Aggregator."""

    budgets: Dict[str, int] = field(default_factory=lambda: dict(DEFAULT_BUDGETS))
    sampling: Dict[str, Any] = field(default_factory=lambda: dict(DEFAULT_SAMPLING))
    output_format: str = "text"
    output_directory: Path = field(default_factory=lambda: Path("./aggregation_reports"))

    @classmethod
    def from_dict(cls, raw: Mapping[str, Any]) -> "AggregatorConfig":
        """Create configuration from dictionary data."""
        budgets = _merge_section(raw.get("budgets"), DEFAULT_BUDGETS, "budgets")
        sampling = _merge_section(raw.get("sampling"), DEFAULT_SAMPLING, "sampling")
        reporting = _merge_section(raw.get("reporting"), DEFAULT_REPORTING, "reporting")

        for name, value in budgets.items():
            if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
                raise ConfigurationError(f"Budget '{name}' must be a positive integer.")
        sampling["atoms"] = tuple(sampling["atoms"])
        factor = sampling["attempt_factor"]
        if not isinstance(factor, int) or isinstance(factor, bool) or factor <= 0:
            raise ConfigurationError("Sampling 'attempt_factor' must be a positive integer.")
        if reporting["output_format"] not in OUTPUT_FORMATS:
            raise ConfigurationError(
                f"Unknown output format '{reporting['output_format']}'; "
                f"expected one of {', '.join(OUTPUT_FORMATS)}."
            )

        return cls(
            budgets=budgets,
            sampling=sampling,
            output_format=reporting["output_format"],
            output_directory=Path(reporting["output_directory"]),
        )

    @classmethod
    def from_yaml(cls, path: str | Path) -> "AggregatorConfig":
        """Load configuration from a YAML file."""
        config_path = Path(path)
        if not config_path.exists():
            raise ConfigurationError(f"Configuration file not found: {config_path}")

        try:
            content = config_path.read_text(encoding="utf-8")
            data = yaml.safe_load(content) or {}
        except yaml.YAMLError as exc:
            msg = f"Unable to parse configuration file {config_path}: {exc}"
            raise ConfigurationError(msg) from exc

        if not isinstance(data, MutableMapping):
            raise ConfigurationError("Configuration must be a mapping at the top level.")

        return cls.from_dict(data)

    def budget(self, name: str) -> int:
        return self.budgets[name]

    def with_overrides(self, **budgets: Optional[int]) -> "AggregatorConfig":
        """Return a copy with the given budgets replaced (``None`` keeps the current value)."""
        merged = dict(self.budgets)
        merged.update({key: value for key, value in budgets.items() if value is not None})
        return AggregatorConfig.from_dict(
            {
                "budgets": merged,
                "sampling": dict(self.sampling),
                "reporting": {
                    "output_format": self.output_format,
                    "output_directory": str(self.output_directory),
                },
            }
        )


def _merge_section(
    provided: Optional[Mapping[str, Any]], defaults: Mapping[str, Any], section: str
) -> Dict[str, Any]:
    """Merge a provided section with its defaults, rejecting unknown keys."""
    if provided is None:
        return dict(defaults)
    if not isinstance(provided, Mapping):
        raise ConfigurationError(f"Section '{section}' must be a mapping.")
    unknown = sorted(set(provided) - set(defaults))
    if unknown:
        raise ConfigurationError(f"Unknown keys in '{section}': {', '.join(unknown)}")
    return {**defaults, **provided}
