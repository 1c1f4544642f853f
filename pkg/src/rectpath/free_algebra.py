"""Truncated free associative algebra on X_1, X_2, ... graded by weight(X_i) = i.

Series are stored sparsely as ``{composition: coefficient}`` where a
composition ``(i1, ..., ik)`` names the monomial ``X_i1 ... X_ik`` and ``()``
is the unit ``I``.  Everything above the truncation weight is discarded.

Two independent ways of computing the Chen series E(a) of step coefficients
live here: :func:`chen_E` multiplies segment exponentials, and
:func:`iterated_integral_direct` integrates piecewise polynomials over the
simplex ``0 <= s1 <= ... <= sk <= 1``.  Under the pinned convention the
coefficient of ``X_i1 ... X_ik`` in ``chen_E`` equals the iterated integral in
which ``a_i1`` is evaluated at the earliest time ``s1``, and segment factors
are multiplied first-segment-leftmost.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import KindError, ResourceError
from .rings import FLOAT, join_kinds, kind_of, normalize

HARD_WEIGHT_CAP = 20
DEFAULT_WEIGHT_CAP = 16
COMPOSITION_CAP = 20


def weight_cap():
    """NC weight cap; ``RECTPATH_WEIGHT_CAP`` overrides the default, never above 20."""
    raw = os.environ.get("RECTPATH_WEIGHT_CAP")
    if raw is None:
        return DEFAULT_WEIGHT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ResourceError(f"RECTPATH_WEIGHT_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ResourceError("RECTPATH_WEIGHT_CAP must be positive")
    return min(cap, HARD_WEIGHT_CAP)


def _check_weight(n):
    cap = weight_cap()
    if n > cap:
        raise ResourceError(f"truncation weight {n} exceeds the cap {cap}")


def weight(comp):
    return sum(comp)


def compositions_of_weight(n, cap=COMPOSITION_CAP):
    """All 2^(n-1) compositions of ``n``, ordered by length then lexicographically."""
    if n < 1:
        raise ValueError("weight must be positive")
    if n > cap:
        raise ResourceError(f"refusing to enumerate compositions of {n} (cap {cap})")
    out = []

    def rec(rest, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for first in range(1, rest + 1):
            prefix.append(first)
            rec(rest - first, prefix)
            prefix.pop()

    rec(n, [])
    out.sort(key=lambda c: (len(c), c))
    return out


@dataclass(frozen=True)
class NCSeries:
    """Element ``c0 I + sum c_w X_w`` of the truncated algebra."""

    degree: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for comp, c in self.terms.items():
            comp = tuple(comp)
            if any(i < 1 for i in comp):
                raise ValueError(f"composition {comp} has a non-positive part")
            c = normalize(c)
            if sum(comp) <= self.degree and c != 0:
                clean[comp] = c
        object.__setattr__(self, "terms", clean)
        join_kinds(*(kind_of(c) for c in clean.values()))

    @classmethod
    def unit(cls, degree):
        return cls(degree, {(): Fraction(1)})

    @classmethod
    def letter(cls, axis, coeff, degree):
        return cls(degree, {(axis,): coeff})

    @property
    def kind(self):
        return join_kinds(*(kind_of(c) for c in self.terms.values()))

    @property
    def constant(self):
        return self.terms.get((), Fraction(0))

    def coeff(self, comp):
        return self.terms.get(tuple(comp), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, NCSeries):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __add__(self, other):
        _compatible(self, other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NCSeries(self.degree, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NCSeries):
            return nc_mul(self, other)
        return self.scale(other)

    def scale(self, c):
        return NCSeries(self.degree, {w: x * c for w, x in self.terms.items()})


def _compatible(u, v):
    if u.degree != v.degree:
        raise ValueError(f"truncation weights differ: {u.degree} != {v.degree}")
    return join_kinds(u.kind, v.kind)


def nc_mul(u, v):
    """Concatenation product, dropping monomials heavier than the truncation."""
    _compatible(u, v)
    n = u.degree
    by_weight = {}
    for w, c in v.terms.items():
        by_weight.setdefault(sum(w), []).append((w, c))
    out = {}
    for w1, c1 in u.terms.items():
        room = n - sum(w1)
        for wt, bucket in by_weight.items():
            if wt > room:
                continue
            for w2, c2 in bucket:
                key = w1 + w2
                out[key] = out.get(key, 0) + c1 * c2
    return NCSeries(n, out)


def nc_exp(h):
    """``sum_n h^n / n!``; terminates because ``h`` has no constant term."""
    if h.constant != 0:
        raise ValueError("nc_exp needs a series with zero constant term")
    result = NCSeries.unit(h.degree)
    power = NCSeries.unit(h.degree)
    k = 1
    while True:
        power = nc_mul(power, h).scale(Fraction(1, k))
        if not power.terms:
            return result
        result = result + power
        k += 1


def nc_log(g):
    """Inverse of :func:`nc_exp` on series with constant term 1."""
    if g.constant != 1:
        raise ValueError("nc_log needs a series with constant term 1")
    x = g - NCSeries.unit(g.degree)
    result = NCSeries(g.degree)
    power = NCSeries.unit(g.degree)
    k = 1
    while True:
        power = nc_mul(power, x)
        if not power.terms:
            return result
        result = result + power.scale(Fraction((-1) ** (k + 1), k))
        k += 1


@dataclass(frozen=True)
class StepCoefficients:
    """Piecewise-constant coefficients on ``[0, 1]``.

    ``segments[j]`` maps an axis ``i`` to the constant value of ``a_i`` on
    ``[breakpoints[j], breakpoints[j+1]]``.
    """

    breakpoints: tuple
    segments: tuple

    def __post_init__(self):
        bps = tuple(Fraction(x) for x in self.breakpoints)
        if len(bps) < 2 and self.segments:
            raise ValueError("need at least two breakpoints")
        if bps and (bps[0] != 0 or bps[-1] != 1):
            raise ValueError("breakpoints must run from 0 to 1")
        if any(x >= y for x, y in zip(bps, bps[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        segs = tuple({int(k): normalize(v) for k, v in seg.items()} for seg in self.segments)
        if bps and len(segs) != len(bps) - 1:
            raise ValueError("one amplitude map per segment required")
        for seg in segs:
            if any(k < 1 for k in seg):
                raise ValueError("axes must be positive")
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "segments", segs)

    @classmethod
    def from_letters(cls, letters):
        """Equal-length segments, one axis each; ``(axis, b)`` has integral ``b``."""
        letters = list(letters)
        m = len(letters)
        if m == 0:
            return cls((Fraction(0), Fraction(1)), ({},))
        bps = tuple(Fraction(j, m) for j in range(m + 1))
        return cls(bps, tuple({k: b * m} for k, b in letters))

    @property
    def max_axis(self):
        return max((k for seg in self.segments for k in seg), default=0)

    def durations(self):
        return [y - x for x, y in zip(self.breakpoints, self.breakpoints[1:])]

    def then(self, other):
        """Coefficients of ``self`` followed in time by ``other``, rescaled to ``[0, 1]``."""
        half = Fraction(1, 2)
        bps = [x * half for x in self.breakpoints] + [half + x * half for x in other.breakpoints[1:]]
        segs = [{k: v * 2 for k, v in seg.items()} for seg in self.segments + other.segments]
        return StepCoefficients(tuple(bps), tuple(segs))


def _check_exact_step(a):
    for seg in a.segments:
        for v in seg.values():
            if kind_of(v) == FLOAT:
                raise KindError("chen_E requires exact amplitudes")


def chen_E(a, degree):
    """E(a) as the ordered product of segment exponentials, first segment leftmost."""
    _check_weight(degree)
    _check_exact_step(a)
    result = NCSeries.unit(degree)
    for dx, seg in zip(a.durations(), a.segments):
        h = NCSeries(degree, {(k,): v * dx for k, v in seg.items()})
        if h.terms:
            result = nc_mul(result, nc_exp(h))
    return result


def _poly_eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def iterated_integral_direct(a, comp):
    """Simplex integral ``int_{0<=s1<=...<=sk<=1} a_ik(sk) ... a_i1(s1)``.

    The running antiderivative is kept as one polynomial in ``s`` per segment
    and integrated segment by segment, so nothing here touches the algebra.
    """
    comp = tuple(comp)
    if not comp:
        return Fraction(1)
    bps = a.breakpoints
    # F_0 = 1 on every segment
    current = [[Fraction(1)] for _ in a.segments]
    for axis in comp:
        nxt = []
        carry = Fraction(0)
        for j, seg in enumerate(a.segments):
            c = seg.get(axis, 0)
            p = current[j]
            # antiderivative of c * p(u), then shift so it equals `carry` at x_j
            anti = [Fraction(0)] + [c * p[e] / (e + 1) for e in range(len(p))]
            anti[0] = carry - _poly_eval(anti, bps[j])
            nxt.append(anti)
            carry = _poly_eval(anti, bps[j + 1])
        current = nxt
    return _poly_eval(current[-1], bps[-1])


def shuffle_pairs(alpha, beta):
    """Multiset of interleavings of ``alpha`` and ``beta`` preserving both orders."""
    alpha, beta = tuple(alpha), tuple(beta)
    out = Counter()

    def rec(i, j, prefix):
        if i == len(alpha) and j == len(beta):
            out[tuple(prefix)] += 1
            return
        if i < len(alpha):
            prefix.append(alpha[i])
            rec(i + 1, j, prefix)
            prefix.pop()
        if j < len(beta):
            prefix.append(beta[j])
            rec(i, j + 1, prefix)
            prefix.pop()

    rec(0, 0, [])
    assert sum(out.values()) == math.comb(len(alpha) + len(beta), len(alpha))
    return out
