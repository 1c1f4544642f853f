"""Symbolic center conditions for a fixed axis pattern.

For a pattern ``(k_1, ..., k_l)`` the amplitudes become independent variables
``a{k}_{position}`` and the return-map coefficients ``c_i`` become
polynomials in them.  Their common zero set is the center variety of the
family; by the free-product structure it is a finite union of linear
subspaces, one for each way the letters can cancel.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .center import effective_bound, reduce_word, theorem2_bound
from .errors import InternalConsistencyError, ResourceError
from .rings import Poly, scalar_to_json
from .return_map import Word, route_A
from .sampling import random_rational

MAX_COUNT = 40


def variable_name(axis, position):
    return f"a{axis}_{position}"


@dataclass(frozen=True)
class BautinSystem:
    axes: tuple
    variables: tuple
    polys: tuple
    d: int
    depth: int

    def c(self, i):
        return self.polys[i - 1]

    @property
    def count(self):
        return len(self.polys)

    def evaluate(self, point, upto=None):
        """Exact values ``c_1 .. c_upto`` at ``point`` (one amplitude per letter)."""
        if len(point) != len(self.axes):
            raise ValueError(f"point has {len(point)} entries, pattern has {len(self.axes)}")
        upto = self.count if upto is None else upto
        if upto > self.count:
            raise ValueError(f"system only holds c_1..c_{self.count}")
        values = dict(zip(self.variables, (Fraction(x) if isinstance(x, int) else x for x in point)))
        return [p.subs(values).as_scalar() for p in self.polys[:upto]]

    def to_json(self):
        out = []
        for p in self.polys:
            terms = [{"exponents": list(p.exponent_vector(m, self.variables)), "coeff": scalar_to_json(c)}
                     for m, c in p.sorted_terms(list(self.variables))]
            out.append(terms)
        return {"pattern": list(self.axes), "variables": list(self.variables), "d": self.d,
                "depth": self.depth, "polynomials": out}


def bautin_system(axes, count=None):
    """``c_1 .. c_count`` as polynomials in the letter amplitudes (route A).

    ``count`` defaults to ``depth + 1`` so that :func:`variety_membership`
    can run on the result.
    """
    axes = tuple(int(k) for k in axes)
    if not axes or any(k < 1 for k in axes):
        raise ValueError("axis pattern must be a nonempty list of positive integers")
    d, depth = theorem2_bound(axes), effective_bound(axes)
    count = depth + 1 if count is None else count
    if count < 1:
        raise ValueError("count must be positive")
    if count > MAX_COUNT:
        raise ResourceError(f"count {count} exceeds the cap {MAX_COUNT}")
    names = tuple(variable_name(k, pos) for pos, k in enumerate(axes, 1))
    word = Word(tuple((k, Poly.var(v)) for k, v in zip(axes, names)), count)
    series = route_A(word)
    polys = tuple(c if isinstance(c, Poly) else Poly.const(c) for c in series.coeffs)
    return BautinSystem(axes, names, polys, d, depth)


def quasi_homogeneity_check(system, z):
    """Exact check of ``c_i(z^k1 a_1, ..., z^kl a_l) == z^i c_i(a)`` for every stored ``c_i``."""
    z = Fraction(z)
    if z == 0:
        raise ValueError("z must be nonzero")
    scaled = {v: Poly.var(v) * z ** k for v, k in zip(system.variables, system.axes)}
    return all(p.subs(scaled) == p * z ** i for i, p in enumerate(system.polys, 1))


def variety_membership(system, point):
    """Whether ``c_1 = ... = c_(D+1) = 0`` at ``point``, cross-checked by word reduction.

    ``D`` is the system's checking depth (see :func:`rectpath.center.effective_bound`).
    """
    if system.count < system.depth + 1:
        system = bautin_system(system.axes, system.depth + 1)
    values = system.evaluate(point, system.depth + 1)
    on_variety = all(v == 0 for v in values)
    word = Word(tuple(zip(system.axes, point)))
    by_reduction = not reduce_word(word).letters
    if on_variety != by_reduction:
        raise InternalConsistencyError(
            "Bautin polynomials and word reduction disagree",
            {"pattern": list(system.axes), "point": [str(x) for x in point],
             "values": [str(v) for v in values]},
        )
    return on_variety


def _nc_partitions(seq, axes):
    """Non-crossing partitions of ``seq`` into blocks of a single axis each."""
    if not seq:
        yield []
        return
    first = seq[0]

    def grow(block, start):
        # close the block here: partition the tail
        for tail in _nc_partitions(seq[start:], axes):
            yield [block] + tail
        for j in range(start, len(seq)):
            if axes[seq[j]] != axes[first]:
                continue
            for gap in _nc_partitions(seq[start:j], axes):
                for rest in grow(block + (seq[j],), j + 1):
                    yield gap + rest

    yield from grow((first,), 1)


def center_strata(axes):
    """Linear pieces of the center variety.

    Each stratum is ``(zeros, blocks)``: the positions forced to zero and the
    same-axis blocks whose amplitudes must sum to zero.
    """
    l = len(axes)
    out = []
    for mask in range(1 << l):
        zeros = tuple(i for i in range(l) if mask >> i & 1)
        live = [i for i in range(l) if not mask >> i & 1]
        for part in _nc_partitions(live, axes):
            if all(len(b) >= 2 for b in part):
                out.append((zeros, tuple(part)))
    return out


def sample_stratum(stratum, l, rng):
    zeros, blocks = stratum
    point = [Fraction(0)] * l
    for block in blocks:
        vals = [random_rational(rng) for _ in block[:-1]]
        vals.append(-sum(vals))
        for pos, v in zip(block, vals):
            point[pos] = v
    return point


def ideal_probe(system, extra, samples=4, seed=0):
    """Empirical look at whether ``c_(d+1+k)`` vanishes where ``c_1..c_(d+1)`` do.

    Points are drawn from every linear stratum of the center variety.  This is
    heuristic evidence about the zero set only; it says nothing about ideal
    membership.
    """
    need = system.d + 1 + extra
    if system.count < need:
        system = bautin_system(system.axes, need)
    rng = random.Random(seed)
    strata = center_strata(system.axes)
    points = [sample_stratum(s, len(system.axes), rng) for s in strata for _ in range(samples)]
    values = [system.evaluate(p, need) for p in points]
    base_ok = all(v == 0 for vals in values for v in vals[: system.d + 1])
    results = []
    for k in range(1, extra + 1):
        i = system.d + 1 + k
        nonzero = sum(1 for vals in values if vals[i - 1] != 0)
        results.append({"index": i, "vanishes_on_sample": nonzero == 0, "nonzero_count": nonzero})
    return {
        "pattern": list(system.axes),
        "d": system.d,
        "extra": extra,
        "seed": seed,
        "strata": len(strata),
        "samples": len(points),
        "base_conditions_vanish": base_ok,
        "results": results,
        "note": "heuristic: vanishing on sampled center points only; ideal membership is not decided",
    }
