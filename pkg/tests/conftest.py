import random

import pytest


@pytest.fixture
def rng():
    return random.Random(20240601)


_CRITERIA = []


@pytest.fixture
def criterion():
    """Record and print one PASS/FAIL line for an acceptance criterion."""
    def record(n, ok, text):
        line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {text}"
        print(line)
        _CRITERIA.append((n, line))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_CRITERIA, key=lambda t: t[0]):
            terminalreporter.write_line(line)
