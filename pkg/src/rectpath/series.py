"""Truncated univariate power series.

:class:`GeneralSeries` holds ``e0 + e1 r + ... + eN r^N``; :class:`MapSeries`
holds an element ``r + c1 r^2 + ... + cN r^(N+1)`` of the composition group of
tangent-to-identity series.  Both are immutable and carry coefficients of a
single ring kind (see :mod:`rectpath.rings`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rings import FLOAT, join_kinds, kind_of, normalize, one_like, to_complex, zero_like

DEFAULT_DEGREE = 16
DEFAULT_POLY_DEGREE = 12


def _kind(coeffs):
    return join_kinds(*(kind_of(c) for c in coeffs))


def _check_compatible(f, g):
    if f.degree != g.degree:
        raise ValueError(f"truncation degrees differ: {f.degree} != {g.degree}")
    return join_kinds(f.kind, g.kind)


def _mul_trunc(a, b, n, zero):
    """Cauchy product of coefficient lists truncated at degree ``n``."""
    out = [zero] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if not x:
            continue
        for j in range(min(len(b), n + 1 - i)):
            y = b[j]
            if y:
                out[i + j] = out[i + j] + x * y
    return out


@dataclass(frozen=True)
class GeneralSeries:
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(normalize(c) for c in self.coeffs))
        _kind(self.coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def kind(self):
        return _kind(self.coeffs)

    @classmethod
    def zero(cls, degree, kind=None):
        return cls((zero_like(kind),) * (degree + 1))

    @classmethod
    def one(cls, degree, kind=None):
        return cls((one_like(kind),) + (zero_like(kind),) * degree)

    @classmethod
    def monomial(cls, coeff, power, degree):
        """``coeff * r**power`` truncated at ``degree``."""
        z = zero_like(kind_of(coeff))
        cs = [z] * (degree + 1)
        if power <= degree:
            cs[power] = coeff
        return cls(tuple(cs))

    def __getitem__(self, i):
        return self.coeffs[i]

    def __add__(self, other):
        return ps_ring_ops(self, other, "add")

    def __sub__(self, other):
        return ps_ring_ops(self, other.scale(-1), "add")

    def __mul__(self, other):
        if isinstance(other, GeneralSeries):
            return ps_ring_ops(self, other, "mul")
        return self.scale(other)

    def scale(self, c):
        return GeneralSeries(tuple(x * c for x in self.coeffs))

    def truncate(self, degree):
        if degree > self.degree:
            raise ValueError("cannot extend a truncated series")
        return GeneralSeries(self.coeffs[: degree + 1])


@dataclass(frozen=True)
class MapSeries:
    """``r + sum_{i=1..N} c_i r^(i+1)``; ``coeffs[i-1]`` is ``c_i``."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("truncation degree must be positive")
        object.__setattr__(self, "coeffs", tuple(normalize(c) for c in self.coeffs))
        _kind(self.coeffs)

    @property
    def degree(self):
        return len(self.coeffs)

    @property
    def kind(self):
        return _kind(self.coeffs)

    @classmethod
    def identity(cls, degree, kind=None):
        return cls((zero_like(kind),) * degree)

    def c(self, i):
        """Coefficient of ``r^(i+1)``, 1-based as in ``c_i``."""
        if not 1 <= i <= self.degree:
            raise IndexError(f"c_{i} outside 1..{self.degree}")
        return self.coeffs[i - 1]

    def is_identity(self):
        return all(not c for c in self.coeffs)

    def to_general(self, degree=None):
        """Coefficients ``[0, 1, c1, ..., cN]`` as a :class:`GeneralSeries`."""
        k = self.kind
        full = (zero_like(k), one_like(k)) + self.coeffs
        if degree is not None:
            full = full[: degree + 1] + (zero_like(k),) * max(0, degree + 1 - len(full))
        return GeneralSeries(full)

    @classmethod
    def from_general(cls, s):
        if s.degree < 2:
            raise ValueError("need degree >= 2 to form a map series")
        if s[0] != 0 or s[1] != 1:
            raise ValueError("series is not tangent to the identity")
        return cls(s.coeffs[2:])

    def truncate(self, degree):
        if degree > self.degree:
            raise ValueError("cannot extend a truncated series")
        return MapSeries(self.coeffs[:degree])

    def map_coeffs(self, fn):
        return MapSeries(tuple(fn(c) for c in self.coeffs))


def ps_ring_ops(f, g, op):
    """Coefficientwise sum (``op="add"``) or truncated Cauchy product (``op="mul"``)."""
    kind = _check_compatible(f, g)
    if op == "add":
        return GeneralSeries(tuple(a + b for a, b in zip(f.coeffs, g.coeffs)))
    if op == "mul":
        return GeneralSeries(tuple(_mul_trunc(f.coeffs, g.coeffs, f.degree, zero_like(kind))))
    raise ValueError(f"unknown op {op!r}")


def ps_compose(f, g):
    """Composition ``f(g(r))`` truncated at ``r^(N+1)``."""
    kind = _check_compatible(f, g)
    n = f.degree + 1
    zero = zero_like(kind)
    gs = list(g.to_general(n).coeffs)
    # f(x) = x * (1 + c1 x + ... + cN x^N); Horner on the bracket
    acc = [zero] * (n + 1)
    acc[0] = f.coeffs[-1]
    for c in reversed((one_like(kind),) + f.coeffs[:-1]):
        acc = _mul_trunc(acc, gs, n, zero)
        acc[0] = acc[0] + c
    out = _mul_trunc(acc, gs, n, zero)
    return MapSeries(tuple(out[2:]))


def ps_comp_inverse(f):
    """Compositional inverse, solved one degree at a time."""
    n = f.degree
    kind = f.kind
    d = [zero_like(kind)] * n
    for m in range(1, n + 1):
        head_f = f.truncate(m)
        head_g = MapSeries(tuple(d[:m]))
        e = ps_compose(head_f, head_g).coeffs[m - 1]
        d[m - 1] = d[m - 1] - e
    return MapSeries(tuple(d))


def ps_binom_pow(u, p, q=1):
    """``(1 + u)^(p/q)`` for a series ``u`` with ``u(0) == 0``.

    Uses the power recurrence ``m g_m = sum_j ((alpha + 1) j - m) f_j g_(m-j)``
    for ``g = f^alpha``, which needs only divisions by integers and so stays
    exact over every coefficient kind.
    """
    if q == 0:
        raise ValueError("exponent denominator q must be nonzero")
    if u[0]:
        raise ValueError("ps_binom_pow needs a series with zero constant term")
    alpha = Fraction(p, q)
    kind = u.kind
    if kind == FLOAT:
        alpha = float(alpha)
    n = u.degree
    f = u.coeffs
    g = [one_like(kind)] + [zero_like(kind)] * n
    if alpha == 0:
        return GeneralSeries(tuple(g))
    for m in range(1, n + 1):
        acc = zero_like(kind)
        for j in range(1, m + 1):
            if f[j] and g[m - j]:
                acc = acc + ((alpha + 1) * j - m) * f[j] * g[m - j]
        g[m] = acc / m
    return GeneralSeries(tuple(g))


def ps_eval(f, r0):
    """Evaluate the truncated polynomial ``r + sum c_i r^(i+1)`` at complex ``r0``."""
    r0 = complex(r0)
    acc = 0j
    for c in reversed(f.coeffs):
        acc = acc * r0 + to_complex(c)
    return r0 + acc * r0 * r0
