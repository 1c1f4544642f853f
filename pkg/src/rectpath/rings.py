"""Coefficient rings.

Four kinds of coefficients are used throughout the package:

* ``rational``  -- :class:`fractions.Fraction` (plain ``int`` is accepted and
  normalised to ``Fraction``);
* ``gaussian``  -- :class:`GaussQ`, a complex number with rational parts;
* ``poly``      -- :class:`Poly`, a sparse multivariate polynomial whose
  coefficients are rationals or Gaussian rationals;
* ``float``     -- Python ``complex``/``float``; used by the numerical oracle
  only and never mixed with the exact kinds.

Exact kinds promote in the order rational -> gaussian -> poly.  Python's
reflected-operator protocol does the promotion for us: ``Fraction`` returns
``NotImplemented`` for unknown operands, so ``GaussQ`` and ``Poly`` handle the
mixed cases in their ``__r*__`` methods.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .errors import KindError, ParseError

RATIONAL = "rational"
GAUSSIAN = "gaussian"
POLY = "poly"
FLOAT = "float"

_EXACT_ORDER = {RATIONAL: 0, GAUSSIAN: 1, POLY: 2}


def _check_exact(other):
    if isinstance(other, (float, complex)):
        raise KindError("cannot mix exact coefficients with floating point values")


class GaussQ:
    """Gaussian rational ``re + i*im`` with both parts in lowest terms."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussQ is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussQ):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussQ(other)
        _check_exact(other)
        return None

    def __repr__(self):
        return f"GaussQ({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*I"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re} {sign} {abs(self.im)}*I)"

    def __eq__(self, other):
        if isinstance(other, GaussQ):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussQ(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self):
        return GaussQ(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        p = self * o.conjugate()
        return GaussQ(p.re / n, p.im / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return GaussQ(1) / (self ** (-n))
        result, base = GaussQ(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __complex__(self):
        return complex(float(self.re), float(self.im))


def _natural_key(name):
    return tuple(int(p) if p.isdigit() else p for p in re.split(r"(\d+)", name))


def _scalar_mul_monomials(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda t: _natural_key(t[0])))


class Poly:
    """Sparse multivariate polynomial with exact coefficients.

    Monomials are tuples of ``(variable, exponent)`` pairs sorted by a natural
    ordering of variable names (``a2_10`` after ``a2_9``); the constant monomial
    is ``()``.  Zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                _check_exact(c)
                if isinstance(c, int):
                    c = Fraction(c)
                if c != 0:
                    clean[mono] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def var(cls, name):
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, GaussQ)):
            return Poly.const(other)
        _check_exact(other)
        return None

    def variables(self):
        names = {v for mono in self.terms for v, _ in mono}
        return sorted(names, key=_natural_key)

    def is_constant(self):
        return all(mono == () for mono in self.terms)

    def constant_term(self):
        return self.terms.get((), Fraction(0))

    def total_degree(self):
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, (float, complex)) else None
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_term())
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __pos__(self):
        return self

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussQ)):
            if other == 0:
                return Poly()
            return Poly({m: c * other for m, c in self.terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _scalar_mul_monomials(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if not other.is_constant() or not other:
                raise KindError("polynomial division is only defined by nonzero constants")
            other = other.constant_term()
        if not isinstance(other, (int, Fraction, GaussQ)):
            _check_exact(other)
            return NotImplemented
        if isinstance(other, int):
            other = Fraction(other)
        return Poly({m: c / other for m, c in self.terms.items()})

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def subs(self, values):
        """Substitute ``values`` (a mapping name -> exact value) into the polynomial.

        Variables not present in ``values`` stay symbolic.  The result is
        always a :class:`Poly`; use :meth:`as_scalar` to collapse constants.
        """
        out = Poly()
        for mono, c in self.terms.items():
            term = Poly.const(c)
            rest = []
            for v, e in mono:
                if v in values:
                    term = term * (values[v] ** e)
                else:
                    rest.append((v, e))
            if rest:
                term = term * Poly({tuple(rest): Fraction(1)})
            out = out + term
        return out

    def as_scalar(self):
        if not self.is_constant():
            raise KindError("polynomial is not constant")
        return self.constant_term()

    def exponent_vector(self, mono, variables):
        d = dict(mono)
        return tuple(d.get(v, 0) for v in variables)

    def sorted_terms(self, variables=None):
        """Terms in graded-lex order (highest total degree first)."""
        variables = variables or self.variables()

        def key(item):
            ev = self.exponent_vector(item[0], variables)
            return (-sum(ev), tuple(-e for e in ev))

        return sorted(self.terms.items(), key=key)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            factors = "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)
            cs = str(c)
            if not factors:
                parts.append(cs)
            elif c == 1:
                parts.append(factors)
            elif c == -1:
                parts.append("-" + factors)
            else:
                parts.append(f"{cs}*{factors}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self})"


def kind_of(x):
    if isinstance(x, bool):
        raise KindError("booleans are not ring elements")
    if isinstance(x, (int, Fraction)):
        return RATIONAL
    if isinstance(x, GaussQ):
        return GAUSSIAN
    if isinstance(x, Poly):
        return POLY
    if isinstance(x, (float, complex)):
        return FLOAT
    raise KindError(f"unsupported coefficient type {type(x).__name__}")


def join_kinds(*kinds):
    """Kind obtained by combining values of the given kinds."""
    kinds = set(kinds)
    if not kinds:
        return RATIONAL
    if FLOAT in kinds:
        if len(kinds) > 1:
            raise KindError("cannot mix exact and floating point coefficients")
        return FLOAT
    return max(kinds, key=_EXACT_ORDER.__getitem__)


def normalize(x):
    """Canonical storage form: ints become Fractions, floats become complex."""
    if isinstance(x, bool):
        raise KindError("booleans are not ring elements")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return complex(x)
    kind_of(x)
    return x


def zero_like(kind):
    return complex(0) if kind == FLOAT else Fraction(0)


def one_like(kind):
    return complex(1) if kind == FLOAT else Fraction(1)


def to_complex(x):
    if isinstance(x, Poly):
        x = x.as_scalar()
    if isinstance(x, GaussQ):
        return complex(x)
    if isinstance(x, Rational):
        return complex(float(x))
    return complex(x)


def is_exact(x):
    return kind_of(x) != FLOAT


# --- serialisation ---------------------------------------------------------

def rational_to_str(q):
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s, location=None):
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise ParseError(f"expected a rational string, got {s!r}", location)
    text = str(s).strip()
    try:
        if "/" in text:
            # Fraction() rejects a signed denominator such as "6/-4"
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"invalid rational {s!r} ({exc})", location) from None


def scalar_to_json(x):
    """``"p/q"`` for rationals, ``{"re": .., "im": ..}`` for Gaussian rationals."""
    if isinstance(x, GaussQ):
        return {"re": rational_to_str(x.re), "im": rational_to_str(x.im)}
    if isinstance(x, (int, Fraction)):
        return rational_to_str(x)
    if isinstance(x, Poly):
        return str(x)
    raise KindError(f"cannot serialise {type(x).__name__} exactly")


def scalar_from_json(obj, location=None):
    if isinstance(obj, dict):
        if set(obj) != {"re", "im"}:
            raise ParseError("complex amplitude needs exactly the keys 're' and 'im'", location)
        re_ = parse_rational(obj["re"], location)
        im_ = parse_rational(obj["im"], location)
        return re_ if im_ == 0 else GaussQ(re_, im_)
    return parse_rational(obj, location)
