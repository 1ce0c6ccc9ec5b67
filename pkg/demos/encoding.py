"""
Encoding a message polynomial
=============================

A message is a bivariate polynomial with deg_x < s and deg_y < t. Its
codeword is an m x n matrix; each column is one symbol of the code.
"""

import numpy as np

from ppcode.code import (
    column_agreement,
    encode,
    encode_via_tensor,
    min_distance_exhaustive,
    ppc_default,
    rows_in_rs,
)
from ppcode.gf import BiPoly, field_create

F = field_create(5)
code = ppc_default(F, 2, 2)
print(code)
print("length", code.N, "dimension", code.dimension, "rate", code.rate)

f = BiPoly(F, [[1, 2], [0, 3]])  # 1 + 2y + 3xy
c = encode(code, f)
print(c)

# The same matrix comes out of a tensor product of two RS codewords with
# row i rotated by i * m^-1 (mod n).
assert np.array_equal(c, encode_via_tensor(code, f))

# Each row is a codeword of a Reed-Solomon code over the extension field.
print("rows in RS:", rows_in_rs(code, c[None]).all())

# Small enough to enumerate every codeword.
col, sym = min_distance_exhaustive(code)
print("column distance", col, "symbol distance of the unfolded code", sym)

g = f + BiPoly(F, [[0], [1]])
print("columns shared by f and f + x:", column_agreement(c, encode(code, g)))
