import random
from collections import Counter
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from rectpath.errors import KindError, ResourceError
from rectpath.free_algebra import (
    NCSeries,
    StepCoefficients,
    chen_E,
    compositions_of_weight,
    iterated_integral_direct,
    nc_exp,
    nc_log,
    nc_mul,
    shuffle_pairs,
    weight_cap,
)
from rectpath.sampling import random_step

from .conftest import rationals

F = Fraction
seeds = st.integers(0, 2 ** 32 - 1)


def series(n, d):
    return NCSeries(n, d)


# --- compositions ----------------------------------------------------------

def test_compositions_small():
    assert compositions_of_weight(1) == [(1,)]
    assert set(compositions_of_weight(3)) == {(3,), (1, 2), (2, 1), (1, 1, 1)}


@pytest.mark.parametrize("n", range(1, 11))
def test_composition_count(n):
    comps = compositions_of_weight(n)
    assert len(comps) == len(set(comps)) == 2 ** (n - 1)
    assert all(sum(c) == n for c in comps)


def test_composition_cap():
    with pytest.raises(ResourceError):
        compositions_of_weight(5, cap=4)


def test_weight_cap_env(monkeypatch):
    monkeypatch.delenv("RECTPATH_WEIGHT_CAP", raising=False)
    assert weight_cap() == 16
    monkeypatch.setenv("RECTPATH_WEIGHT_CAP", "8")
    assert weight_cap() == 8
    monkeypatch.setenv("RECTPATH_WEIGHT_CAP", "99")
    assert weight_cap() == 20


# --- products ----------------------------------------------------------------

def test_product_is_noncommutative():
    u = series(3, {(): 1, (1,): 1})
    v = series(3, {(): 1, (2,): 1})
    assert nc_mul(u, v) == series(3, {(): 1, (1,): 1, (2,): 1, (1, 2): 1})
    assert nc_mul(v, u).coeff((2, 1)) == 1 and nc_mul(v, u).coeff((1, 2)) == 0


def test_unit_is_neutral():
    u = series(4, {(1,): F(2, 3), (2, 1): -1})
    assert u * NCSeries.unit(4) == u == NCSeries.unit(4) * u


def test_telescoping():
    u = series(3, {(): 1, (1,): 1})
    v = series(3, {(): 1, (1,): -1, (1, 1): 1})
    assert u * v == series(3, {(): 1, (1, 1, 1): 1})
    assert (u * v).degree == 3
    assert series(2, {(): 1, (1,): 1}) * series(2, {(): 1, (1,): -1, (1, 1): 1}) == NCSeries.unit(2)


def test_truncation_drops_heavy_terms():
    x = NCSeries.letter(3, 1, 4)
    assert (x * x).terms == {}


# --- exp / log ---------------------------------------------------------------

def test_exp_zero():
    assert nc_exp(NCSeries(5, {})) == NCSeries.unit(5)


def test_exp_single_letter(b):
    assert nc_exp(NCSeries.letter(2, b, 5)) == series(5, {(): 1, (2,): b, (2, 2): b * b / 2})


def test_exp_rejects_constant():
    with pytest.raises(ValueError):
        nc_exp(series(3, {(): 1}))


def nc_elements(n):
    comps = [c for w in range(1, n + 1) for c in compositions_of_weight(w)]
    return st.lists(rationals(4), min_size=len(comps), max_size=len(comps)).map(
        lambda cs: NCSeries(n, dict(zip(comps, cs))))


@given(nc_elements(5))
@settings(max_examples=25, deadline=None)
def test_log_inverts_exp(h):
    assert nc_log(nc_exp(h)) == h


@given(nc_elements(5))
@settings(max_examples=25, deadline=None)
def test_exp_of_negation_is_inverse(h):
    assert nc_exp(h) * nc_exp(-h) == NCSeries.unit(5)


# --- Chen series -------------------------------------------------------------

def test_chen_single_segment(b):
    a = StepCoefficients((0, 1), ({3: b},))
    assert chen_E(a, 7) == nc_exp(NCSeries.letter(3, b, 7))


def test_chen_empty():
    assert chen_E(StepCoefficients.from_letters([]), 6) == NCSeries.unit(6)


def test_chen_two_segments(a, b):
    E = chen_E(StepCoefficients.from_letters([(1, a), (2, b)]), 3)
    assert E.coeff((1, 2)) == a * b
    assert E.coeff((2, 1)) == 0


def test_chen_rejects_floats():
    with pytest.raises(KindError):
        chen_E(StepCoefficients((0, 1), ({1: 0.5},)), 3)


def test_direct_integrals(a, b):
    c = F(7, 3)
    assert iterated_integral_direct(StepCoefficients((0, 1), ({2: c},)), (2,)) == c
    assert iterated_integral_direct(StepCoefficients((0, 1), ({1: c},)), (1, 1)) == c * c / 2
    step = StepCoefficients.from_letters([(1, a), (2, b)])
    assert iterated_integral_direct(step, (1, 2)) == a * b
    assert iterated_integral_direct(step, (2, 1)) == 0


def _all_comps(n):
    return [c for w in range(1, n + 1) for c in compositions_of_weight(w)]


@given(seeds)
@settings(max_examples=30, deadline=None)
def test_chen_equals_direct_integrals_identity_pairing(seed):
    a = random_step(random.Random(seed))
    E = chen_E(a, 5)
    for c in _all_comps(5):
        assert E.coeff(c) == iterated_integral_direct(a, c)


def test_reversed_pairing_is_not_the_convention():
    a = StepCoefficients.from_letters([(1, 2), (2, 3)])
    E = chen_E(a, 3)
    assert E.coeff((1, 2)) != iterated_integral_direct(a, (2, 1))


@given(seeds, seeds)
@settings(max_examples=25, deadline=None)
def test_concatenation_law(s1, s2):
    a, b = random_step(random.Random(s1)), random_step(random.Random(s2))
    assert chen_E(a.then(b), 6) == chen_E(a, 6) * chen_E(b, 6)


# --- shuffles ----------------------------------------------------------------

def test_shuffle_examples():
    assert shuffle_pairs((1,), (1,)) == Counter({(1, 1): 2})
    assert shuffle_pairs((1,), (2,)) == Counter({(1, 2): 1, (2, 1): 1})
    assert shuffle_pairs((1, 1), (2,)) == Counter({(2, 1, 1): 1, (1, 2, 1): 1, (1, 1, 2): 1})


@given(st.lists(st.integers(1, 3), max_size=4), st.lists(st.integers(1, 3), max_size=4))
def test_shuffle_count(x, y):
    from math import comb
    assert sum(shuffle_pairs(x, y).values()) == comb(len(x) + len(y), len(x))


@given(seeds)
@settings(max_examples=20, deadline=None)
def test_shuffle_identity(seed):
    a = random_step(random.Random(seed))
    E = chen_E(a, 5)
    comps = _all_comps(4)
    for x, y in product(comps, comps):
        if sum(x) + sum(y) <= 5:
            rhs = sum((m * E.coeff(g) for g, m in shuffle_pairs(x, y).items()), F(0))
            assert E.coeff(x) * E.coeff(y) == rhs


def test_step_validation():
    with pytest.raises(ValueError):
        StepCoefficients((0, F(1, 2), F(1, 2), 1), ({1: 1}, {1: 1}, {1: 1}))
    with pytest.raises(ValueError):
        StepCoefficients((0, 1), ({0: 1},))
