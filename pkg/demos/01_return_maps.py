"""Return maps of rectangular words, three ways.

A word is a sequence of letters (axis k, amplitude b).  Each letter flows
dv/dx = b v^(k+1) for unit time; the return map sends the starting radius r
to the final value.  We compute the series by composing single-letter maps,
by the Chen-series formula, and by the exponent-sum formula, and check that
they agree.
"""

from fractions import Fraction as F

from rectpath import Poly, Word, route_A, route_B, route_C

a, b = Poly.var("a"), Poly.var("b")

# Symbolic amplitudes: the order of letters matters from c_3 on.
w = Word(((1, a), (2, b)), 4)
print("time order (1,a),(2,b):")
for i, c in enumerate(route_A(w).coeffs, 1):
    print(f"  c_{i} = {c}")

flipped = Word(((2, b), (1, a)), 4)
print("reversed order, c_3 =", route_A(flipped).c(3))

# Concrete rational amplitudes: all routes give identical coefficients.
w = Word(((1, F(1, 2)), (3, F(-2, 3)), (2, F(5, 7))), 10)
A, B, C = route_A(w), route_B(w), route_C(w)
print("routes agree:", A == B == C)
print("c_1..c_10 =", [str(c) for c in A.coeffs])
