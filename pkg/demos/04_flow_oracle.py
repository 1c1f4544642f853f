"""Checking the series against the exact flows.

Each segment has a closed-form solution, so a word's return map can be
evaluated numerically with no integrator.  The gap to the truncated series
should shrink like r^(N+2).
"""

from fractions import Fraction as F

from rectpath import Word, convergence_check, route_A, word_flow
from rectpath.series import ps_eval

w = Word(((1, F(1, 2)), (2, F(-1, 3)), (3, F(1, 4))), 10)
for r in (1e-1, 1e-2):
    flow = word_flow(w, r).value
    print(f"r = {r}: flow {flow.real:.17g}, series {ps_eval(route_A(w), r).real:.17g}")

rep = convergence_check(w, 10, (1e-1, 1e-2, 1e-3, 1e-4))
print("residuals:", rep["residuals"])
print(f"fitted slope {rep['slope']:.2f}, threshold {rep['threshold']}, {rep['status']}")

# Running a word and then its reverse with negated amplitudes returns r.
back = word_flow(w.then(w.inverse()), 1e-2).value
print("round trip error:", abs(back - 1e-2))
