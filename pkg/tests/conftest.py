from fractions import Fraction

import pytest

from hkcoiso.presets import load_preset
from hkcoiso.quadratic_space import new_space, block_sum

U = [[0, 1], [1, 0]]


@pytest.fixture
def U_space():
    return new_space(U)


@pytest.fixture
def u_m2():
    return new_space(block_sum(U, [[-2]]))


@pytest.fixture(scope="session")
def rho1_split():
    return load_preset("u2-m2").split()


@pytest.fixture(scope="session")
def rho2_split():
    return load_preset("u2-m2-e").split()


def F(*xs):
    return tuple(Fraction(x) for x in xs)


# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if passed else 'FAIL'}  {detail}")
