import pytest

from sfirate.units import LaserField, Target

# Filled by tests/test_acceptance.py, printed in the terminal summary.
ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def hydrogen():
    return Target.hydrogen()


@pytest.fixture(scope="session")
def field_mp():
    """800 nm, 1e13 W/cm^2: multiphoton regime."""
    return LaserField.from_lab(800.0, 1e13)


@pytest.fixture(scope="session")
def field_tun():
    """800 nm, 6e14 W/cm^2: tunneling regime."""
    return LaserField.from_lab(800.0, 6e14)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
