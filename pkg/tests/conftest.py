from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from qclift import ExponentMatrix, read_exponent_matrix

ROOT = Path(__file__).resolve().parents[1]
WIMAX_PATH = ROOT / "data" / "ieee80216e_rate12_z96.em"

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def wimax():
    if not WIMAX_PATH.exists():
        pytest.skip("IEEE 802.16e rate-1/2 base matrix not available")
    return read_exponent_matrix(WIMAX_PATH)


@st.composite
def exponent_matrices(draw, max_rows=4, max_cols=4, max_L=8, min_L=1):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    L = draw(st.integers(min_L, max_L))
    entries = draw(st.lists(st.lists(st.integers(-1, L - 1), min_size=n, max_size=n),
                            min_size=m, max_size=m))
    return ExponentMatrix(np.array(entries), L)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
