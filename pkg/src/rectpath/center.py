"""Center decision for rectangular words.

A rectangular word is a center exactly when it cancels to the empty word in
the free product of copies of the additive group (one copy per axis).  The
coefficient bound ``d = prod k_i / gcd(k_i, k_(i+1))`` is meant to say that
the first ``d + 1`` return-map coefficients already decide the question.  As a
formula it undercounts: a single letter on axis ``k`` has ``d = 1`` but its
first nonzero coefficient is ``c_k``.  Certificates therefore check the
first ``D + 1`` coefficients with ``D = d * max(axes)``
(:func:`effective_bound`), and report ``d`` alongside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InternalConsistencyError
from .return_map import Letter, Word, route_A

REDUCTION = "reduction"
COEFFICIENTS = "coefficients"
BOTH = "both"


@dataclass(frozen=True)
class CenterVerdict:
    is_center: bool
    reduced_word: Word
    bound_d: int
    coefficients_checked: list = field(default_factory=list)
    method: str = REDUCTION
    depth: int | None = None


def reduce_word(w):
    """Free-product normal form: merge adjacent same-axis letters, drop zeros.

    A single left-to-right pass with a stack is enough; every merge that an
    arbitrary strategy could perform is eventually performed here too.
    """
    stack = []
    for axis, amp in w.letters:
        if amp == 0:
            continue
        if stack and stack[-1].axis == axis:
            total = stack[-1].amp + amp
            stack.pop()
            if total != 0:
                stack.append(Letter(axis, total))
        else:
            stack.append(Letter(axis, amp))
    return Word(tuple(stack), w.truncation)


def theorem2_bound(axes):
    """``prod_{i<l} k_i / gcd(k_i, k_(i+1))``; 1 for a single axis or none."""
    axes = tuple(axes)
    d = 1
    for k, k_next in zip(axes, axes[1:]):
        d *= k // math.gcd(k, k_next)
    return d


def effective_bound(axes):
    """Checking depth ``D = d * max(axes)`` used by the certificates."""
    axes = tuple(axes)
    return theorem2_bound(axes) * max(axes, default=1)


def _coefficients(w, n):
    return list(enumerate(route_A(w, n).coeffs, 1))


def is_center(w, witness=True):
    """Decide by word reduction.

    For a non-center the first nonzero coefficient among ``c_1..c_(D+1)`` is
    attached as a witness when ``witness`` is true.
    """
    reduced = reduce_word(w)
    d, depth = theorem2_bound(w.axes), effective_bound(w.axes)
    checked = []
    if reduced.letters and witness:
        for i, c in _coefficients(w, depth + 1):
            if c != 0:
                checked.append((i, c))
                break
    return CenterVerdict(not reduced.letters, reduced, d, checked, REDUCTION, depth)


def certify_center(w):
    """Run both word reduction and the ``c_1 .. c_(D+1)`` check and cross-assert."""
    reduced = reduce_word(w)
    d, depth = theorem2_bound(w.axes), effective_bound(w.axes)
    coeffs = _coefficients(w, depth + 1)
    by_coeffs = all(c == 0 for _, c in coeffs)
    by_reduction = not reduced.letters
    if by_coeffs != by_reduction:
        raise InternalConsistencyError(
            "word reduction and coefficient check disagree",
            {"word": [(l.axis, str(l.amp)) for l in w.letters], "d": d, "depth": depth,
             "by_reduction": by_reduction, "by_coefficients": by_coeffs,
             "coefficients": [(i, str(c)) for i, c in coeffs]},
        )
    return CenterVerdict(by_reduction, reduced, d, coeffs, BOTH, depth)
