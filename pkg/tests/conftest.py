import pytest

from trideck.analysis import classify

# verdict lines recorded by tests/test_acceptance.py, echoed after the run
acceptance_lines = []


@pytest.fixture(scope="session")
def classification():
    """Memoized access to exhaustive classification reports (shared across tests)."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = classify(n, max_n=n)
        return cache[n]

    return get


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
