import pytest

from unicusp.candidates import CandidateTriple


@pytest.fixture
def T():
    return lambda d, a, b: CandidateTriple(d, a, b)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
