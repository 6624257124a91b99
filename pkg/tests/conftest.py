import functools

import pytest

from cayleychar.catalog import resolve_group
from cayleychar.dixon import character_table

ACCEPTANCE_LINES: list[str] = []


@functools.lru_cache(maxsize=None)
def group(name: str):
    return resolve_group(name)


@functools.lru_cache(maxsize=None)
def table(name: str):
    return character_table(group(name))


@pytest.fixture
def get_table():
    return table


@pytest.fixture
def get_group():
    return group


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
