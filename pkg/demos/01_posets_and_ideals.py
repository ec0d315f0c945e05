"""Build posets, enumerate their order ideals, and compare counting
invariants between a rectangle and its trapezoid partner.
"""

from fractions import Fraction

from posetdyn import Poset, rectangle, trapezoid

# A poset is a Hasse diagram: elements plus cover pairs.  Transitive
# pairs are rejected, so typos surface immediately.
diamond = Poset("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
print("diamond ideals:", [sorted(I.members) for I in diamond.order_ideals()])

# The 3x4 grid and the trapezoid with parameters (3,7) look nothing
# alike...
P = rectangle(3, 4)
Q = trapezoid(3, 7)
print("\nrectangle rank profile:", P.rank_profile)
print("trapezoid rank profile:", Q.rank_profile)

# ...but they have the same number of height-ell order-preserving maps
# for every ell: their order polynomials agree coefficient by
# coefficient, computed by exact interpolation.
omP = P.order_polynomial()
omQ = Q.order_polynomial()
print("\norder polynomials equal:", omP == omQ)
print("values at ell = 1..5:", [omP(l) for l in range(1, 6)])
print("leading coefficient:", omP.leading_coefficient,
      "= #linear extensions / n! =",
      Fraction(P.linear_extension_count(), 479001600))

# Serialization is deterministic: sorted elements, sorted covers.
print("\nJSON:", diamond.to_json())
