"""
The unfolded code is cyclic
===========================

Reading a codeword column by column gives a vector of length N = m*n. For
the default maps this code is cyclic, with an explicit generator polynomial.
"""

import numpy as np

from ppcode.code import encode, ppc_default
from ppcode.cyclic import (
    check_poly,
    generator_poly,
    hasse_parity_matrix,
    shift_polynomial,
    unfold,
    verify_cyclic_structure,
)
from ppcode.gf import UniPoly, field_create

F = field_create(3, 2)
code = ppc_default(F, 2, 3)
g = generator_poly(code)
print("deg g =", g.degree, "= N - s*t =", code.N - code.s * code.t)

rng = np.random.default_rng(1)
f = code.random_message(rng)
v = unfold(encode(code, f))

# Substituting x -> x+1, y -> gamma*y shifts the unfolded word by one place.
w = unfold(encode(code, shift_polynomial(code, f)))
print("shift matches:", np.array_equal(np.roll(v, -1), w))
print("g divides the codeword:", (UniPoly(F, v) % g).is_zero())
print("g * h == x^N - 1:", g * check_poly(code) == UniPoly.monomial(F, code.N) - UniPoly.one(F))

for line in verify_cyclic_structure(code, trials=50).lines():
    print("  ", line)

# In characteristic p ordinary derivatives lose track of multiplicity; the
# parity matrix H[i, j] = j^i beta^j does not.
G5 = field_create(5)
c = UniPoly.from_roots(G5, [1, 1, 3])
H = hasse_parity_matrix(G5, 1, 2, c.degree + 1)
print("(x-1)^2 divides c:", not G5.matmul(H, c.coeffs[:, None]).any())
