from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import strategies as st

from changhee_ode.xlpoly import XLPoly

SYM_T, SYM_X, SYM_LAM = sp.symbols("t x lam")

fractions = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 12))

xlpolys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(-3, 3)), fractions, max_size=5
).map(XLPoly)


def from_sympy(expr) -> XLPoly:
    """Convert a sympy polynomial in x and lam (nonnegative powers) to XLPoly."""
    poly = sp.Poly(sp.expand(expr), SYM_X, SYM_LAM)
    return XLPoly(
        {(a, b): Fraction(int(c.p), int(c.q)) for (a, b), c in poly.terms()}
    )


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
