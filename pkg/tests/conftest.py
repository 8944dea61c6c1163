import pytest
from hypothesis import settings

from quadcover.planner import plan
from quadcover.scenario import case_study_scenario

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def case_plans():
    """Plans built from the 4-decimal homography, keyed by m."""
    return {m: plan(case_study_scenario(m, decimals=4)) for m in (4, 9)}


@pytest.fixture(scope="session")
def exact_plans():
    """Plans built from the full-precision homography, keyed by m."""
    return {m: plan(case_study_scenario(m, decimals=None)) for m in (4, 9)}


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
