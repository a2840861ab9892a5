from __future__ import annotations

import pytest

_LINES = pytest.StashKey[list]()


@pytest.fixture
def report(request):
    """Record one summary line; all lines are printed at the end of the run."""
    lines = request.config.stash.setdefault(_LINES, [])
    return lines.append


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
