from functools import lru_cache

import pytest
from hypothesis import settings

from linsyll import syllogistics as sg

settings.register_profile("default", deadline=None)
settings.load_profile("default")

GRIDS = [
    (sg.TRADITIONAL, False),
    (sg.TRADITIONAL, True),
    (sg.DEMORGAN, False),
    (sg.DEMORGAN, True),
]


@lru_cache(maxsize=None)
def verdicts(kind, strengthened):
    return tuple(sg.classify(s) for s in sg.enumerate_candidates(kind, strengthened))


@pytest.fixture(scope="session")
def sweep():
    return verdicts


ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
