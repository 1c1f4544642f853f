from fractions import Fraction

import pytest
from hypothesis import strategies as st

from rectpath.rings import Poly
from rectpath.series import MapSeries
from rectpath.return_map import Word

R = Poly.var("r")


def rationals(bound=9, nonzero=False):
    s = st.builds(Fraction, st.integers(-bound, bound), st.integers(1, bound))
    return s.filter(bool) if nonzero else s


def map_series(degree, bound=5):
    return st.lists(rationals(bound), min_size=degree, max_size=degree).map(lambda cs: MapSeries(tuple(cs)))


def words(max_len=5, max_axis=4, truncation=12):
    letter = st.tuples(st.integers(1, max_axis), rationals(nonzero=True))
    return st.lists(letter, max_size=max_len).map(lambda ls: Word(tuple(ls), truncation))


def as_r_poly(f):
    """Map series as an honest polynomial in the symbol r."""
    p = R
    for i, c in enumerate(f.coeffs, 1):
        p = p + c * R ** (i + 1)
    return p


def r_coeff(p, n):
    if n == 0:
        return p.constant_term()
    return p.terms.get((("r", n),), Fraction(0))


def substitute_oracle(f, g):
    """f(g(r)) by plain polynomial substitution, truncated to f's degree."""
    full = as_r_poly(f).subs({"r": as_r_poly(g)})
    return MapSeries(tuple(r_coeff(full, i + 1) for i in range(1, f.degree + 1)))


@pytest.fixture
def a():
    return Poly.var("a")


@pytest.fixture
def b():
    return Poly.var("b")


# acceptance criteria report one line each at the end of the run
ACCEPTANCE_LINES = {}


def record_acceptance(number, title, passed, detail=""):
    line = f"criterion {number} [{'PASS' if passed else 'FAIL'}] {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES[number] = line
    print(line)
    return passed


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
