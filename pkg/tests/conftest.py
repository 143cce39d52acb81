import pytest

from twocolor.pulses import PulseSpec

_acceptance = []


@pytest.fixture
def rect():
    return PulseSpec.rectangular(amplitude=4.0, tau=40.0, kappa=1.0, detuning=-5.0)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
