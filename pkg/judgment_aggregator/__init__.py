"""Judgment Aggregator package exports."""

from .config import AggregatorConfig
from .core import JudgmentAggregator

__all__ = ["AggregatorConfig", "JudgmentAggregator"]
