"""First-return maps of rectangular words.

A word is a time-ordered sequence of letters ``(axis k, amplitude b)``; the
letter stands for the segment on which ``dv/dx = a_k v^(k+1)`` with
``a_k * T = b``.  Its return map is ``r (1 - k b r^k)^(-1/k)``, and the map of
a word applies the letters first-to-last, the first letter innermost.

Three independent routes compute the same truncated series:

* route A -- nested binomial powers: with ``U_j = (r / v_j)^(k_j)``,
  ``U_(j+1) = U_j^(k_(j+1)/k_j) - k_(j+1) b_(j+1) r^(k_(j+1))`` and the map is
  ``r U_l^(-1/k_l)``;  ``method="compose"`` instead folds :func:`ps_compose`
  over the single-letter maps;
* route B -- the Chen series of the word paired with the p-polynomials;
* route C -- the closed sum over letter exponents with the q-polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import InternalConsistencyError, ResourceError
from .free_algebra import StepCoefficients, chen_E, weight_cap
from .rings import join_kinds, kind_of, normalize, zero_like
from .series import DEFAULT_DEGREE, GeneralSeries, MapSeries, ps_binom_pow, ps_compose

ROUTES = ("A", "B", "C")


class Letter(NamedTuple):
    axis: int
    amp: object


@dataclass(frozen=True)
class Word:
    """Letters in time order plus the truncation degree used for return maps.

    Letters whose amplitude is exactly zero are dropped on construction.
    """

    letters: tuple = ()
    truncation: int = DEFAULT_DEGREE

    def __post_init__(self):
        clean = []
        for item in self.letters:
            axis, amp = item
            if isinstance(axis, bool) or not isinstance(axis, int) or axis < 1:
                raise ValueError(f"axis must be a positive integer, got {axis!r}")
            amp = normalize(amp)
            if amp != 0:
                clean.append(Letter(axis, amp))
        if self.truncation < 1:
            raise ValueError("truncation degree must be positive")
        object.__setattr__(self, "letters", tuple(clean))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    @property
    def axes(self):
        return tuple(l.axis for l in self.letters)

    @property
    def kind(self):
        return join_kinds(*(kind_of(l.amp) for l in self.letters))

    def with_truncation(self, n):
        return Word(self.letters, n)

    def then(self, other):
        """``self`` followed in time by ``other``."""
        return Word(self.letters + other.letters, max(self.truncation, other.truncation))

    def inverse(self):
        """Reverse time order and negate amplitudes."""
        return Word(tuple(Letter(l.axis, -l.amp) for l in reversed(self.letters)), self.truncation)

    def to_step(self):
        return StepCoefficients.from_letters(self.letters)


def basic_return_map(n, b, degree=DEFAULT_DEGREE):
    """``r (1 - n b r^n)^(-1/n)`` truncated at ``r^(degree+1)``."""
    if n < 1:
        raise ValueError("axis must be positive")
    u = GeneralSeries.monomial(normalize(-n * b), n, degree)
    g = ps_binom_pow(u, -1, n)
    return MapSeries(g.coeffs[1:])


def p_factor(comp, i):
    """``prod_m (i - (i_1 + ... + i_m) + 1)`` for a composition of weight ``i``."""
    comp = tuple(comp)
    if sum(comp) != i:
        raise ValueError(f"composition {comp} does not have weight {i}")
    out, partial = 1, 0
    for part in comp:
        partial += part
        out *= i - partial + 1
    return out


def q_factor(pattern, exponents, i):
    """Product over letters ``n`` and ``j = 1..s_n`` of ``i - S_(n-1) - j k_n + 1``.

    ``S_(n-1)`` is the weight already used by the earlier letters.
    """
    pattern, exponents = tuple(pattern), tuple(exponents)
    if len(pattern) != len(exponents):
        raise ValueError("pattern and exponents differ in length")
    if sum(k * s for k, s in zip(pattern, exponents)) != i:
        raise ValueError(f"exponents {exponents} do not have weight {i} on {pattern}")
    out, used = 1, 0
    for k, s in zip(pattern, exponents):
        for j in range(1, s + 1):
            out *= i - used - j * k + 1
        used += s * k
    return out


def _degree(w, degree):
    return w.truncation if degree is None else degree


def route_A(w, degree=None, method="nested"):
    n = _degree(w, degree)
    if method == "compose":
        result = MapSeries.identity(n, w.kind)
        for letter in w.letters:
            result = ps_compose(basic_return_map(letter.axis, letter.amp, n), result)
        return result
    if method != "nested":
        raise ValueError(f"unknown route A method {method!r}")
    if not w.letters:
        return MapSeries.identity(n, w.kind)
    u = GeneralSeries.one(n)
    prev = None
    for k, b in w.letters:
        if prev is not None and prev != k:
            u = ps_binom_pow(u - GeneralSeries.one(n), k, prev)
        u = u - GeneralSeries.monomial(normalize(k * b), k, n)
        prev = k
    v = ps_binom_pow(u - GeneralSeries.one(n), -1, prev)
    return MapSeries(v.coeffs[1:])


def route_B(w, degree=None):
    """Return map from the Chen series: ``c_i = sum_c p_factor(c, i) E_c``.

    ``w`` may be a :class:`Word` or general :class:`StepCoefficients`.
    """
    if isinstance(w, Word):
        n = _degree(w, degree)
        step = w.to_step()
    else:
        if degree is None:
            raise ValueError("degree is required for step coefficients")
        n, step = degree, w
    if n > weight_cap():
        raise ResourceError(f"route B degree {n} exceeds the weight cap {weight_cap()}")
    E = chen_E(step, n)
    kind = E.kind
    coeffs = [zero_like(kind)] * n
    for comp, val in E.terms.items():
        if comp:
            i = sum(comp)
            coeffs[i - 1] = coeffs[i - 1] + p_factor(comp, i) * val
    return MapSeries(tuple(coeffs))


def route_C(w, degree=None):
    """Return map from the exponent sum ``sum q * prod b_m^s_m / s_m!``."""
    n = _degree(w, degree)
    letters = w.letters
    kind = w.kind
    coeffs = [zero_like(kind)] * n
    if not letters:
        return MapSeries(tuple(coeffs))
    pattern = tuple(l.axis for l in letters)
    # powers[m][s] = b_m^s / s!
    powers = []
    for k, b in letters:
        row = [Fraction(1)]
        for s in range(1, n // k + 1):
            row.append(row[-1] * b / s)
        powers.append(row)

    def rec(m, used, exps, term):
        if m == len(letters):
            if used:
                coeffs[used - 1] = coeffs[used - 1] + q_factor(pattern, exps, used) * term
            return
        k = pattern[m]
        for s in range((n - used) // k + 1):
            exps.append(s)
            rec(m + 1, used + s * k, exps, term * powers[m][s] if s else term)
            exps.pop()

    rec(0, 0, [], Fraction(1))
    return MapSeries(tuple(coeffs))


def return_map(w, route="A", degree=None):
    """Return map by one route, or by all applicable routes cross-checked.

    With ``route="all"`` route B is included only when the degree is within
    the NC weight cap.  Any disagreement raises
    :class:`InternalConsistencyError`.
    """
    route = route.upper()
    if route == "A":
        return route_A(w, degree)
    if route == "B":
        return route_B(w, degree)
    if route == "C":
        return route_C(w, degree)
    if route != "ALL":
        raise ValueError(f"unknown route {route!r}")
    n = _degree(w, degree)
    results = {"A": route_A(w, n), "C": route_C(w, n)}
    if n <= weight_cap():
        results["B"] = route_B(w, n)
    ref = results["A"]
    for name, res in results.items():
        if res.coeffs != ref.coeffs:
            bad = next(i for i, (x, y) in enumerate(zip(ref.coeffs, res.coeffs), 1) if x != y)
            raise InternalConsistencyError(
                f"route {name} disagrees with route A at c_{bad}",
                {"word": [(l.axis, str(l.amp)) for l in w.letters], "index": bad,
                 "A": str(ref.coeffs[bad - 1]), name: str(res.coeffs[bad - 1])},
            )
    return ref
