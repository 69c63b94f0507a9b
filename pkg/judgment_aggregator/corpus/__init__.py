"""Built-in fixture corpus."""

from .fixtures import (
    CORPUS_DIRECTORY,
    FIXTURES,
    Fixture,
    UnknownFixtureError,
    get_fixture,
    list_fixtures,
    load_fixture,
    run_all,
    run_fixture,
)

__all__ = [
    "CORPUS_DIRECTORY",
    "FIXTURES",
    "Fixture",
    "UnknownFixtureError",
    "get_fixture",
    "list_fixtures",
    "load_fixture",
    "run_all",
    "run_fixture",
]
