import sys

import pytest

from sympshare.field import field_make, gf
from sympshare.rs import build_insecure, build_strong_rs
from sympshare.scheme import scheme_build
from sympshare.symplectic import symp_space

V1 = (1, 1, 1, 0)
V2 = (0, 1, 2, 1)
V3 = (0, 1, 1, 0)
Z4 = (0, 0, 0, 0)


def ternary4():
    """GF(3), n = 4, C_S = 0, C_R spanned by (v1|0) and (0|v1)."""
    F = field_make(3)
    return scheme_build(symp_space(F, 4), symp_space(F, 4, [V1 + Z4, Z4 + V1]))


@pytest.fixture(scope="session")
def t4():
    return ternary4()


@pytest.fixture(scope="session")
def rs7():
    return build_strong_rs(gf(7), 4, 1)


@pytest.fixture(scope="session")
def rs5():
    return build_strong_rs(gf(5), 2, 1)


@pytest.fixture(scope="session")
def insecure4():
    return build_insecure(4)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
