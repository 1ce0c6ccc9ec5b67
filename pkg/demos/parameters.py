"""
Choosing parameters
===================

The schedule picks p near 1/eps^3, a window w near 1/(2 eps^2) and leaves a
gap of about 1/eps^2 between s and m. The reported radius is exact, and at
small sizes it can be far from 1 - R - eps, or even negative.
"""

from fractions import Fraction

from ppcode.harness.params import suggest_params

for eps in (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)):
    sug = suggest_params(eps, Fraction(1, 4))
    print(f"eps={eps}: p={sug.p} s={sug.s} t={sug.t} w={sug.w} "
          f"rate={float(sug.rate):.3f} radius={float(sug.radius):.3f}")
