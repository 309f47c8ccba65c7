import pytest
from hypothesis import HealthCheck, settings

from duncode.tables import default_tables

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

_CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and rep.when == "call":
        number, text = marker.args
        ok = _CRITERIA.get(number, (text, True))[1]
        _CRITERIA[number] = (text, ok and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, (text, passed) in sorted(_CRITERIA.items()):
        terminalreporter.write_line("%s  %2d. %s" % ("PASS" if passed else "FAIL", number, text))


@pytest.fixture(scope="session")
def tables():
    return default_tables()
