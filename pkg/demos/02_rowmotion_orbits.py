"""Rowmotion on order ideals and on height-ell maps: orbit structure,
the frozen staircase orbit, and homomesy of the antichain statistic.
"""

from fractions import Fraction

from posetdyn import (PPartition, homomesy_check, pp_orbits, pp_rowmotion,
                      rectangle, root_poset, row_orbits, rowmotion_order)

# Rowmotion sends an ideal to the ideal generated by the minimal
# elements of its complement.  On the a x b grid its order is a + b.
for a, b in [(2, 2), (2, 3), (3, 4)]:
    print(f"[{a}]x[{b}] rowmotion order:", rowmotion_order(rectangle(a, b)))

# Orbit statistics come out exact.  On the 2x2 grid both orbits average
# down-degree 1: the antichain cardinality statistic is 1-mesic.
obs = row_orbits(rectangle(2, 2))
for o in obs:
    print("orbit length", o.length, "ddeg values", o.ddeg_multiset,
          "average", o.ddeg_average)

# The same operator acts on height-ell maps through piecewise-linear
# toggles.  Here is one orbit of height-3 maps on the 2x2 grid:
P = rectangle(2, 2)
T = PPartition(P, 3, {(1, 1): 1, (1, 2): 1, (2, 1): 2, (2, 2): 2})
orbit = [T]
U = pp_rowmotion(T)
while U != T:
    orbit.append(U)
    U = pp_rowmotion(U)
print("\nheight-3 orbit length:", len(orbit))
print("ddeg along the orbit:", [t.ddeg for t in orbit],
      "average", Fraction(sum(t.ddeg for t in orbit), len(orbit)))

# Across the whole height-3 space the average is the same on every
# orbit: ell * edge density.
rep = homomesy_check(pp_orbits(P, 3), "ddeg")
print("homomesic:", rep.homomesic, "common average:", rep.value)

# The non-grid-like root poset D4 breaks the pattern at height 2: one
# orbit is enormous compared to the Coxeter number 6.
lengths = sorted({o.length for o in pp_orbits(root_poset("D", 4), 2)})
print("\nD4 height-2 orbit lengths:", lengths)
