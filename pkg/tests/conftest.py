"""Shared fixtures: the default scenario and a small fast one."""

import pytest

from imjrc.enumeration import build_table
from imjrc.params import SystemParams, derive

# one verdict line per acceptance check, echoed after the run so the
# outcome is visible even with output capture on
ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def default_params():
    return SystemParams()


@pytest.fixture(scope="session")
def default_derived(default_params):
    return derive(default_params)


@pytest.fixture(scope="session")
def default_table(default_params, default_derived):
    return build_table(default_params, default_derived)


@pytest.fixture(scope="session")
def small_params():
    # 18 codewords, 16 valid, L_T = 13: cheap enough for exhaustive checks
    return SystemParams(M=3, K=2, L_R=4, L_C=2, delta_f=4e6, D=8, master_seed=99)


@pytest.fixture(scope="session")
def small_derived(small_params):
    return derive(small_params)


@pytest.fixture(scope="session")
def small_table(small_params, small_derived):
    return build_table(small_params, small_derived)
