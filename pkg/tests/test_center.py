import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rectpath.center import (
    BOTH,
    certify_center,
    effective_bound,
    is_center,
    reduce_word,
    theorem2_bound,
)
from rectpath.return_map import Letter, Word, route_A
from rectpath.sampling import random_cancelling_word

from .conftest import words

F = Fraction
A, B = F(3, 4), F(-2, 5)


def W(*letters, n=12):
    return Word(tuple(letters), n)


# --- reduction ----------------------------------------------------------------

def test_reduce_examples():
    assert reduce_word(W((1, A), (1, -A))).letters == ()
    assert reduce_word(W((1, A), (2, B), (2, -B), (1, -A))).letters == ()
    w = W((1, A), (2, B), (1, -A))
    assert reduce_word(w) == w


def test_reduce_merges_without_cancelling():
    assert reduce_word(W((3, 1), (3, 2), (1, 5))).letters == ((3, 3), (1, 5))


def _reduce_random_strategy(letters, rng):
    letters = [Letter(*l) for l in letters if l[1] != 0]
    while True:
        spots = [i for i in range(len(letters) - 1) if letters[i].axis == letters[i + 1].axis]
        if not spots:
            return tuple(letters)
        i = rng.choice(spots)
        merged = letters[i].amp + letters[i + 1].amp
        letters[i:i + 2] = [Letter(letters[i].axis, merged)] if merged else []


@given(words(max_len=8, max_axis=2), st.integers(0, 10 ** 6))
@settings(max_examples=60)
def test_confluence(w, seed):
    # build extra cancellation opportunities by appending a reversed prefix
    w = w.then(Word(w.inverse().letters[: len(w.letters) // 2]))
    assert _reduce_random_strategy(w.letters, random.Random(seed)) == reduce_word(w).letters


# --- verdicts -------------------------------------------------------------------

def test_cancelling_pair_is_center():
    v = is_center(W((1, A), (1, -A)))
    assert v.is_center and v.reduced_word.letters == ()


def test_single_letter_witness():
    v = is_center(W((1, A)))
    assert not v.is_center
    assert v.coefficients_checked == [(1, A)]


def test_two_letter_witness(a, b):
    v = is_center(W((1, A), (2, B)))
    assert not v.is_center
    assert v.coefficients_checked[0][0] <= 2
    # symbolic c2 contains b
    assert route_A(W((1, a), (2, b), n=2)).c(2) == a * a + b


# --- bound ---------------------------------------------------------------------

def test_bound_values():
    assert theorem2_bound((2, 3, 2)) == 6
    assert theorem2_bound((5,)) == 1
    assert theorem2_bound((1, 2)) == 1
    assert theorem2_bound(()) == 1


def test_effective_bound():
    assert effective_bound((3,)) == 3
    assert effective_bound((2, 3, 2)) == 18
    assert effective_bound(()) == 1


def test_single_letter_on_high_axis_needs_more_than_d_plus_one():
    # c_1 = c_2 = 0 but c_3 = b: the verbatim bound alone does not see it
    f = route_A(W((3, B)))
    assert theorem2_bound((3,)) == 1
    assert f.c(1) == f.c(2) == 0 and f.c(3) == B


# --- certificates -----------------------------------------------------------------

def test_certify_cancelling_pair():
    v = certify_center(W((1, A), (1, -A)))
    assert v.is_center and v.method == BOTH and v.bound_d == 1
    assert all(c == 0 for _, c in v.coefficients_checked)


def test_certify_two_letters():
    v = certify_center(W((1, A), (2, B)))
    assert not v.is_center
    values = dict(v.coefficients_checked)
    assert values[1] == A and values[2] == A * A + B
    assert certify_center(W((1, 0), (2, 0))).is_center


@given(words(max_len=5, max_axis=4))
@settings(max_examples=60, deadline=None)
def test_certificate_soundness(w):
    v = certify_center(w)
    assert v.is_center == (not reduce_word(w).letters)
    assert len(v.coefficients_checked) == v.depth + 1


@given(st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_cancelling_words_are_certified(seed):
    w = random_cancelling_word(random.Random(seed), max_len=3, max_axis=3, truncation=8)
    assert certify_center(w).is_center


@given(words(max_len=3, max_axis=3), words(max_len=3, max_axis=3))
@settings(max_examples=60, deadline=None)
def test_free_product_law(w1, w2):
    same = reduce_word(w1).letters == reduce_word(w2).letters
    assert is_center(w1.then(w2.inverse()), witness=False).is_center == same
