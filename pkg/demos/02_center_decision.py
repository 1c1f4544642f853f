"""Deciding whether a word is a center.

A word is a center when its return map is the identity.  For rectangular
words this happens exactly when the word cancels away: merge neighbouring
letters on the same axis, drop zeros, repeat.  The coefficient check is run
alongside as a certificate.
"""

from fractions import Fraction as F

from rectpath import Word, certify_center, is_center, reduce_word, route_A, theorem2_bound
from rectpath.center import effective_bound

p, q = F(3, 4), F(-1, 5)

nested = Word(((1, p), (2, q), (2, -q), (1, -p)), 12)
print("nested cancellation reduces to", reduce_word(nested).letters)
print("certified center:", certify_center(nested).is_center)

w = Word(((1, p), (2, q), (1, -p)), 12)
v = is_center(w)
print("(1,p)(2,q)(1,-p) center?", v.is_center, "witness", [(i, str(c)) for i, c in v.coefficients_checked])

# The product formula for the bound is too small for a lone letter on a high
# axis: c_1 and c_2 vanish, c_3 does not.
single = Word(((3, F(2)),), 6)
print("axis-3 letter: d =", theorem2_bound(single.axes), "coefficients", [str(c) for c in route_A(single).coeffs])
print("checking depth used instead:", effective_bound(single.axes))
