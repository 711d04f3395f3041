import os

import pytest
from hypothesis import HealthCheck, settings

from cardmat.catalog import instances

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def _id(row):
    name, _, c = row
    return f"{name}-c{'_'.join(map(str, c))}"


CATALOG = instances()
SMALL = [row for row in instances(extra=True) if row[1].n <= 8]


@pytest.fixture(params=CATALOG, ids=[_id(r) for r in CATALOG])
def catalog_instance(request):
    return request.param


@pytest.fixture(params=SMALL, ids=[_id(r) for r in SMALL])
def small_instance(request):
    return request.param


_GATE = pytest.StashKey[list]()


@pytest.fixture
def gate_log(request):
    """Collects the one-line acceptance verdicts printed in the terminal summary."""
    return request.config.stash.setdefault(_GATE, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_GATE, [])
    if lines:
        terminalreporter.section("acceptance gate")
        for line in sorted(lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
