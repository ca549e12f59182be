import pytest

from spectral_bound.exactnum import IntPoly

ACCEPTANCE_LINES: list[str] = []


def poly(*coeffs_high_first: int) -> IntPoly:
    """Build an IntPoly from coefficients listed highest degree first."""
    return IntPoly(list(reversed(coeffs_high_first)))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    crit = item.get_closest_marker("criterion")
    if crit is not None and report.when == "call":
        number, title = crit.args
        status = "PASS" if report.passed else "FAIL"
        ACCEPTANCE_LINES.append(f"acceptance criterion {number}: {status}  {title}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
