"""Center conditions as polynomials.

Fix an axis pattern and treat the amplitudes as unknowns.  The coefficients
c_i become polynomials whose common zeros form the center variety.
"""

from fractions import Fraction as F

from rectpath import bautin_system, ideal_probe, quasi_homogeneity_check, variety_membership

s = bautin_system((1, 2), 3)
for i, p in enumerate(s.polys, 1):
    print(f"c_{i} = {p}")
print("quasi-homogeneous for z = 2:", quasi_homogeneity_check(s, 2))

t = bautin_system((1, 1))
print("(1,1): c_1 =", t.c(1), " c_2 =", t.c(2))
print("(5/2, -5/2) on the variety:", variety_membership(t, (F(5, 2), F(-5, 2))))
print("(1, 1) on the variety:", variety_membership(t, (F(1), F(1))))

# Sample the variety stratum by stratum and look at higher coefficients.
report = ideal_probe(bautin_system((1, 2, 1, 2)), extra=3, seed=1)
print("strata:", report["strata"], "sample points:", report["samples"])
for r in report["results"]:
    print(f"  c_{r['index']} vanishes on the sample: {r['vanishes_on_sample']}")
