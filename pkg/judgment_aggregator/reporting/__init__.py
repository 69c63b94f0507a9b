"""Report writers."""

from .json_reporter import JsonReporter, to_jsonable
from .text_reporter import TextReporter

__all__ = ["JsonReporter", "TextReporter", "to_jsonable"]
