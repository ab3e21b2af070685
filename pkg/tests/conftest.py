import os

import pytest
from hypothesis import HealthCheck, settings

from arborsplit.generators import even_cycle
from arborsplit.plane_graph import PlaneGraph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def c4() -> PlaneGraph:
    return even_cycle(4)


_CRITERIA: list[str] = []


@pytest.fixture(scope="session")
def criteria_log():
    """Collects one PASS/FAIL line per acceptance criterion for the summary."""
    return _CRITERIA


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
