"""Toggle certificates: an exact linear-algebra witness that down-degree
has constant expectation under every toggle-symmetric distribution.
"""

from posetdyn import (edge_density, is_cde, is_mcde, rectangle, root_poset,
                      tcde_solve, trapezoid)

# Solving the certificate system on the dihedral root poset recovers the
# two-minimal-element identity: 2*ddeg + T_a + T_b = 2.
P = root_poset("I", 7)
cert = tcde_solve(P)
scale, coeffs, delta = cert.cleared()
print("I2(7) certificate (x%d): delta = %s" % (scale, delta))
for p, c in sorted(coeffs.items(), key=repr):
    if c:
        print("   ", p, "->", c)

# The 15-element H3 root poset carries a certificate too; its edge
# density is 15/10 = 3/2.
H = root_poset("H", 3)
cert = tcde_solve(H)
print("\nH3: delta =", cert.delta, "=", edge_density(H))

# The trapezoid family is where certificates stop: trap:2,5 has none,
# yet its lattice still has constant multichain expectations, proven via
# the polynomial identity in the height.
T = trapezoid(2, 5)
print("\ntrap:2,5 certificate:", tcde_solve(T))
print("trap:2,5 multichain-constant:", is_mcde(T))
print("trap:3,7 multichain-constant:", is_mcde(trapezoid(3, 7)))

# And D4 fails at the very first comparison.
D = root_poset("D", 4)
print("\nroot:D4 maxchain-vs-uniform:", is_cde(D))
