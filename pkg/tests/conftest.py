import numpy as np
import pytest

from gamowsusy import PotentialSpec, analytic_resonance, refine_record

REFERENCE_CASES = [(100.0, m) for m in (1, 3, 5, 7)] + [(1000.0, m) for m in (1, 3, 5, 7)]


@pytest.fixture(scope="session")
def well():
    return PotentialSpec(100.0, 10.0)


@pytest.fixture(scope="session")
def refined(well):
    """Refined poles of the v0=100, a=10 well for m = 1, 3, 5, 7."""
    return {m: refine_record(well, analytic_resonance(well, m)).k_refined for m in (1, 3, 5, 7)}


def fd_second(f, r, h):
    """8th-order central second difference."""
    c = [-1 / 560, 8 / 315, -1 / 5, 8 / 5, -205 / 72, 8 / 5, -1 / 5, 8 / 315, -1 / 560]
    return sum(ci * f(r + (i - 4) * h) for i, ci in enumerate(c)) / h**2


def fd_first(f, r, h):
    return (f(r + h) - f(r - h)) / (2 * h)


rng = np.random.default_rng(12345)


ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
