from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rectpath.errors import KindError
from rectpath.rings import Poly
from rectpath.series import (
    GeneralSeries,
    MapSeries,
    ps_binom_pow,
    ps_comp_inverse,
    ps_compose,
    ps_eval,
    ps_ring_ops,
)

from .conftest import map_series, rationals, substitute_oracle

F = Fraction


def G(*cs):
    return GeneralSeries(tuple(cs))


# --- ring ops -------------------------------------------------------------

def test_difference_of_squares():
    assert ps_ring_ops(G(1, 1, 0), G(1, -1, 0), "mul") == G(1, 0, -1)


def test_additive_identity():
    f = G(1, 2, 3)
    assert ps_ring_ops(f, GeneralSeries.zero(2), "add") == f


def test_binomial_cube():
    # (1+r)^3 by repeated addition: (1+r)^2 = 1+2r+r^2, times (1+r)
    sq = G(1, 2, 1, 0)
    assert ps_ring_ops(sq, G(1, 1, 0, 0), "mul") == G(1, 3, 3, 1)


def test_kind_mismatch():
    with pytest.raises(KindError):
        ps_ring_ops(G(1, 1), G(1.0, 0.5), "add")


def test_degree_mismatch():
    with pytest.raises(ValueError):
        ps_ring_ops(G(1, 1), G(1, 1, 1), "add")


# --- composition ----------------------------------------------------------

def test_identity_is_neutral():
    f = MapSeries((F(1),))
    assert ps_compose(f, MapSeries.identity(1)) == f
    assert ps_compose(MapSeries.identity(1), f) == f


def test_quadratic_terms_add(a, b):
    assert ps_compose(MapSeries((a, 0)), MapSeries((b, 0))).coeffs[0] == a + b


def test_compose_frozen_value():
    # (r + r^2) o (r - r^2) = r - 2 r^3 + r^4, by substitution oracle
    assert ps_compose(MapSeries((1, 0, 0)), MapSeries((-1, 0, 0))) == MapSeries((0, -2, 1))


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_compose_matches_substitution(data):
    n = data.draw(st.integers(1, 6))
    f, g = data.draw(map_series(n)), data.draw(map_series(n))
    assert ps_compose(f, g) == substitute_oracle(f, g)


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_compose_associative(data):
    n = data.draw(st.integers(1, 6))
    f, g, h = (data.draw(map_series(n)) for _ in range(3))
    assert ps_compose(ps_compose(f, g), h) == ps_compose(f, ps_compose(g, h))


# --- inverse ---------------------------------------------------------------

def test_inverse_of_identity():
    assert ps_comp_inverse(MapSeries.identity(4)) == MapSeries.identity(4)


def test_inverse_quadratic(a):
    g = ps_comp_inverse(MapSeries((a, 0, 0)))
    assert g.coeffs == (-a, 2 * a ** 2, -5 * a ** 3)
    assert substitute_oracle(MapSeries((a, 0, 0)), g).is_identity()


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_inverse_two_sided_and_involutive(data):
    n = data.draw(st.integers(1, 7))
    f = data.draw(map_series(n))
    g = ps_comp_inverse(f)
    assert ps_compose(f, g).is_identity()
    assert ps_compose(g, f).is_identity()
    assert ps_comp_inverse(g) == f


# --- binomial powers -------------------------------------------------------

def test_inverse_sqrt(b):
    # (1 - x)^(-1/2) = sum (2s-1)!!/(2^s s!) x^s with x = 2 b r^2
    out = ps_binom_pow(G(0, 0, -2 * b, 0, 0), -1, 2)
    assert out.coeffs == (1, 0, b, 0, F(3, 2) * b ** 2)


def test_zeroth_power():
    assert ps_binom_pow(G(0, 5, -3, 2), 0, 7) == G(1, 0, 0, 0)


def test_geometric(a):
    assert ps_binom_pow(G(0, -a, 0, 0), -1, 1).coeffs == (1, a, a ** 2, a ** 3)


def test_q_zero_rejected():
    with pytest.raises(ValueError):
        ps_binom_pow(G(0, 1), 1, 0)


@given(st.lists(rationals(5), min_size=5, max_size=5), st.integers(0, 4))
@settings(max_examples=30, deadline=None)
def test_positive_integer_power_matches_repeated_product(cs, p):
    u = GeneralSeries((F(0),) + tuple(cs))
    expect = GeneralSeries.one(5)
    for _ in range(p):
        expect = expect * (GeneralSeries.one(5) + u)
    assert ps_binom_pow(u, p, 1) == expect


@given(st.lists(rationals(5), min_size=6, max_size=6), st.integers(-4, 4), st.integers(-4, 4), st.integers(1, 5))
@settings(max_examples=40, deadline=None)
def test_power_law(cs, p1, p2, q):
    u = GeneralSeries((F(0),) + tuple(cs))
    assert ps_binom_pow(u, p1, q) * ps_binom_pow(u, p2, q) == ps_binom_pow(u, p1 + p2, q)


# --- evaluation ------------------------------------------------------------

def test_eval():
    assert ps_eval(MapSeries.identity(3), 0.5) == 0.5
    assert ps_eval(MapSeries((1,)), 0.1) == pytest.approx(0.11, abs=1e-15)
    assert ps_eval(MapSeries((2,)), 0.01) == pytest.approx(0.0102, abs=1e-15)


def test_poly_coefficients_supported(a):
    f = MapSeries((a, Poly.const(0)))
    assert f.kind == "poly"
