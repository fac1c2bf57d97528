import pytest
from hypothesis import settings, HealthCheck

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def census2():
    from tropicount.census import run_census
    return run_census(2)


@pytest.fixture(scope="session")
def evaluated2():
    from tropicount.census import evaluated
    return evaluated(2)


@pytest.fixture(scope="session")
def separated2(evaluated2):
    from tropicount.floorplan import Separated
    return [(p, v) for p, v in evaluated2 if isinstance(v, Separated)]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance")
        for line in RESULTS:
            terminalreporter.write_line(line)
