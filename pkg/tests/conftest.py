import functools

import pytest
from hypothesis import settings

settings.register_profile("repro", derandomize=True, deadline=None, max_examples=200)
settings.load_profile("repro")


@functools.lru_cache(maxsize=None)
def _corpus():
    from drglocal.classification import standard_corpus
    return tuple(standard_corpus())


@pytest.fixture(scope="session")
def corpus():
    return _corpus()


def corpus_graphs():
    return _corpus()


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
