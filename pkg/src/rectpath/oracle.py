"""Numerical ground truth from the closed-form segment flows.

On a segment ``dv/dx = a_n v^(n+1)`` with ``a_n T = b`` the solution is
``v0 (1 - n b v0^n)^(-1/n)`` (principal branch), so a word's return map can
be evaluated without any ODE integrator.  By default everything runs in
double precision; pass ``dps`` to evaluate with mpmath at that many decimal
digits instead.  :func:`convergence_check` always uses mpmath, because the
truncation residuals it fits (``~ r^(N+2)``) sit far below double rounding of
``r`` itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from .errors import BranchError
from .rings import GaussQ, Poly
from .return_map import return_map


def _is_on_cut(z):
    return z.imag == 0 and z.real <= 0


def _to_mp(x):
    if isinstance(x, Poly):
        x = x.as_scalar()
    if isinstance(x, GaussQ):
        return mpmath.mpc(_to_mp(x.re), _to_mp(x.im))
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpc(x)


def _to_complex(x):
    if isinstance(x, Poly):
        x = x.as_scalar()
    if isinstance(x, GaussQ):
        return complex(x)
    if isinstance(x, Fraction):
        return complex(float(x))
    return complex(x)


def segment_flow(n, b, v0, dps=None):
    """Endpoint of the flow of ``dv/dx = b v^(n+1)`` over unit time from ``v0``."""
    if dps is None:
        b, v0 = _to_complex(b), complex(v0)
        z = 1 - n * b * v0 ** n
        if _is_on_cut(z):
            raise BranchError(f"radicand {z} lies on the branch cut")
        return v0 * z ** (-1.0 / n)
    with mpmath.workdps(dps):
        b, v0 = _to_mp(b), mpmath.mpc(v0)
        z = 1 - n * b * v0 ** n
        if _is_on_cut(z):
            raise BranchError(f"radicand {z} lies on the branch cut")
        return v0 * z ** (mpmath.mpf(-1) / n)


@dataclass
class FlowResult:
    r0: complex
    value: object
    intermediates: list = field(default_factory=list)
    branch_safe: bool = True
    failed_segment: int | None = None


def word_flow(w, r0, dps=None, strict=True):
    """Apply the segment flows letter by letter in time order.

    With ``strict=False`` a branch violation is reported in the result
    (``branch_safe=False``, ``value=None``) instead of raised.
    """
    v = complex(r0) if dps is None else mpmath.mpc(r0)
    values = []
    for idx, (k, b) in enumerate(w.letters):
        try:
            v = segment_flow(k, b, v, dps)
        except BranchError as exc:
            if strict:
                raise BranchError(f"segment {idx}: {exc}", segment=idx) from None
            return FlowResult(r0, None, values, False, idx)
        values.append(v)
    return FlowResult(r0, v, values, True)


def _series_value(series, r, dps):
    with mpmath.workdps(dps):
        r = mpmath.mpc(r)
        acc = mpmath.mpc(0)
        for c in reversed(series.coeffs):
            acc = acc * r + _to_mp(c)
        return r + acc * r * r


def convergence_check(w, degree, radii, dps=None, seed=None):
    """Fit the log-log slope of ``|flow(r) - series(r)|`` over ``radii``.

    Passes when the slope is at least ``degree + 0.5``.  If every residual is
    at the working-precision floor (a center, or a series that happens to be
    exact) the check auto-passes; a branch violation makes it inconclusive.
    """
    radii = [float(r) for r in radii]
    if len(radii) < 2 or any(r <= 0 for r in radii):
        raise ValueError("need at least two positive radii")
    if any(b >= a for a, b in zip(radii, radii[1:])):
        raise ValueError("radii must be strictly decreasing")
    if dps is None:
        dps = int((degree + 3) * max(1.0, -math.log10(min(radii)))) + 30
    series = return_map(w, "A", degree)
    report = {"degree": degree, "radii": radii, "dps": dps, "seed": seed, "residuals": [],
              "slope": None, "threshold": degree + 0.5}
    floors = []
    for r in radii:
        flow = word_flow(w, r, dps=dps, strict=False)
        if not flow.branch_safe:
            report.update(status="inconclusive", passed=False,
                          reason=f"branch cut hit at radius {r} in segment {flow.failed_segment}")
            return report
        with mpmath.workdps(dps):
            res = abs(flow.value - _series_value(series, r, dps))
            floor = mpmath.mpf(r) * mpmath.mpf(10) ** (10 - dps)
            report["residuals"].append(mpmath.nstr(res, 8))
            floors.append((r, res, res <= floor))
    above = [(r, res) for r, res, tiny in floors if not tiny]
    if len(above) < 2:
        report.update(status="auto-pass", passed=True,
                      reason="residuals at the working-precision floor")
        return report
    xs = np.array([math.log10(r) for r, _ in above])
    ys = np.array([float(mpmath.log10(res)) for _, res in above])
    slope = float(np.polyfit(xs, ys, 1)[0])
    passed = slope >= degree + 0.5
    report.update(slope=slope, passed=passed, status="pass" if passed else "fail")
    return report
