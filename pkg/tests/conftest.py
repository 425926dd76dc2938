import time

import pytest

from uncertainty_cost.model import BASELINE, HIGHER_RISK, HIGHER_RISK_LOWER_INNOVATION

CALIBRATION = {
    "baseline": BASELINE,
    "higher_risk": HIGHER_RISK,
    "higher_risk_lower_innovation": HIGHER_RISK_LOWER_INNOVATION,
}


@pytest.fixture
def baseline():
    return BASELINE


@pytest.fixture(params=sorted(CALIBRATION))
def calibration_params(request):
    return CALIBRATION[request.param]


_SESSION_START = time.perf_counter()
SUITE_LIMIT_S = 60.0


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in test_acceptance.RESULTS:
        terminalreporter.write_line(line)
    # Only meaningful when the whole suite ran.
    if terminalreporter.config.args == [] or set(terminalreporter.config.args) == {"tests"}:
        elapsed = time.perf_counter() - _SESSION_START
        verdict = "PASS" if elapsed < SUITE_LIMIT_S else "FAIL"
        terminalreporter.write_line(f"[{verdict}] C9 full suite runtime: {elapsed:.1f} s (limit {SUITE_LIMIT_S:.0f} s)")
