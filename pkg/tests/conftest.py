from __future__ import annotations

import pytest

from rootposet.rootsys import admissible_types, get_root_system


ALL_TYPES = [str(t) for t in admissible_types(8)]


@pytest.fixture(params=ALL_TYPES)
def any_rs(request):
    return get_root_system(request.param)


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    """Collects one verdict line per acceptance criterion for the session summary."""
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
