import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "weilpoly",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("weilpoly")

_acceptance_outcomes: list[tuple[str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.fspath.basename == "test_acceptance.py":
        _acceptance_outcomes.append((item.name, "PASS" if rep.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_outcomes:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, verdict in _acceptance_outcomes:
        terminalreporter.write_line(f"{verdict}  {name}")
