import pytest
from fractions import Fraction

import _acceptance_log
from gtassoc.associators import phi0_reference


def pytest_terminal_summary(terminalreporter):
    if _acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_log.LINES:
            terminalreporter.write_line(line)
from gtassoc.grtgt import g_ab, grt_cap_psi
from gtassoc.hecke import MatrixModel
from gtassoc.symcoef import SymRing


@pytest.fixture(scope="session")
def phi0():
    return phi0_reference(5)


@pytest.fixture(scope="session")
def ab_ring():
    return SymRing(("a", "b"))


@pytest.fixture(scope="session")
def gab_symbolic(phi0, ab_ring):
    return g_ab(ab_ring.symbol("a"), ab_ring.symbol("b"), phi0)


@pytest.fixture(scope="session")
def cap_psi_symbolic(ab_ring):
    return grt_cap_psi(ab_ring.symbol("a"), ab_ring.symbol("b"), 5, ab_ring)


@pytest.fixture(scope="session")
def semi_model(phi0):
    return MatrixModel("semi", phi0)


@pytest.fixture(scope="session")
def gab_rational(phi0):
    return g_ab(Fraction(2), Fraction(3), phi0)
