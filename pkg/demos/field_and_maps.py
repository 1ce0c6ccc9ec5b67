"""
Finite fields and affine maps
=============================

Elements of GF(p^r) are plain integers: the coefficient vector of the
residue polynomial read in base p. Everything below works on numpy arrays.
"""

import numpy as np

from ppcode.affine import AffineMap
from ppcode.gf import field_create, splitting_degree_profile

F = field_create(3, 2)  # GF(9); default modulus is the first irreducible, here x^2 + 1
print(F, "primitive element:", F.primitive)

a = np.arange(9)
print("a * a  =", F.mul(a, a))
print("a^-1   =", F.inv(a[1:]))

# An affine map x -> a*x + b has a finite order in the group of such maps.
l1 = AffineMap(F, 1, 1)
l2 = AffineMap(F, F.primitive, 0)
print(l1, "has order", l1.order())
print(l2, "has order", l2.order())

# Orbits are what the code evaluates along.
print("orbit of 0 under l1:", l1.orbit(0, l1.order()))
print("orbit of 1 under l2:", l2.orbit(1, l2.order()))

# x^q - l(x) factors into linear pieces (one per fixed point) and
# irreducibles of degree ord(l).
for l in (l1, l2, AffineMap(F, 2, 1)):
    print(f"{str(l):>8}: profile {splitting_degree_profile(F, l)}, fixed {l.fixed_points()}")
