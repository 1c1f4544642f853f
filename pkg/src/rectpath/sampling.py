"""Seeded random inputs for property runs (CLI ``crosscheck`` and the tests)."""

from __future__ import annotations

from fractions import Fraction

from .free_algebra import StepCoefficients
from .return_map import Letter, Word


def random_rational(rng, bound=9, nonzero=True):
    """``p/q`` with ``|p| <= bound`` and ``1 <= q <= bound``."""
    while True:
        q = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if q or not nonzero:
            return q


def random_word(rng, max_len=5, max_axis=4, truncation=12, bound=9, min_len=0):
    n = rng.randint(min_len, max_len)
    letters = [(rng.randint(1, max_axis), random_rational(rng, bound)) for _ in range(n)]
    return Word(tuple(letters), truncation)


def random_cancelling_word(rng, max_len=4, max_axis=4, truncation=16, bound=9, extra_pairs=2):
    """A word that reduces to the empty word but is not visibly ``w w^-1``.

    Starts from ``w`` followed by its time-reversed negation, splits some
    letters into two same-axis pieces, and inserts cancelling pairs
    ``(k, c), (k, -c)`` at random positions.
    """
    w = random_word(rng, max_len, max_axis, truncation, bound, min_len=1)
    letters = list(w.then(w.inverse()).letters)
    out = []
    for axis, amp in letters:
        if rng.random() < 0.3:
            part = random_rational(rng, bound)
            if part != amp:
                out.extend([Letter(axis, part), Letter(axis, amp - part)])
                continue
        out.append(Letter(axis, amp))
    for _ in range(rng.randint(0, extra_pairs)):
        pos = rng.randint(0, len(out))
        k, c = rng.randint(1, max_axis), random_rational(rng, bound)
        out[pos:pos] = [Letter(k, c), Letter(k, -c)]
    return Word(tuple(out), truncation)


def random_step(rng, max_segments=3, max_axis=3, max_axes_per_segment=3, bound=9):
    """General step coefficients: several axes may be active on one segment."""
    m = rng.randint(1, max_segments)
    cuts = sorted({Fraction(rng.randint(1, 11), 12) for _ in range(m - 1)})
    bps = (Fraction(0), *cuts, Fraction(1))
    segs = []
    for _ in range(len(bps) - 1):
        axes = rng.sample(range(1, max_axis + 1), rng.randint(1, min(max_axes_per_segment, max_axis)))
        segs.append({k: random_rational(rng, bound) for k in axes})
    return StepCoefficients(bps, tuple(segs))
