import numpy as np
import pytest

ACCEPTANCE_LINES: list[str] = []


def factor_paths(n=24):
    """Capital and labor paths that are not collinear with a time trend."""
    i = np.arange(n)
    capital = 100.0 * np.exp(0.08 * i + 0.05 * np.sin(i))
    labor = 30.0 * np.exp(0.02 * i + 0.03 * np.cos(1.7 * i))
    return capital, labor


@pytest.fixture
def paths():
    return factor_paths()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
