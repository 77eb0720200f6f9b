"""Shared pytest plumbing for the suite.

The acceptance tests each record a single one-line verdict through the
``acceptance_log`` fixture.  Those lines are echoed immediately (visible with
``pytest -s``) and replayed in a terminal summary section so that a plain
``pytest -v`` run always ends with one line per acceptance criterion,
pass or fail.
"""

import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    def record(line: str) -> None:
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
