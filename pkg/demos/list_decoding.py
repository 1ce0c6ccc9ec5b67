"""
List decoding past half the distance
====================================

Corrupt a few whole columns, then recover the message. The decoder returns
a linear subspace of messages of dimension below w; if it is
small enough, the candidates are enumerated and filtered by agreement.
"""

import numpy as np

from ppcode.code import column_agreement, encode, ppc_default
from ppcode.decode import agreement_threshold, in_span, list_decode
from ppcode.gf import field_create
from ppcode.harness.channel import corrupt_columns
from ppcode.harness.oracle import brute_force_list

rng = np.random.default_rng(7)

code = ppc_default(field_create(11), 2, 3)
w = 4
thr = agreement_threshold(code, w)
print(code, "threshold", thr, "of", code.n, "columns")

f = code.random_message(rng)
r = corrupt_columns(encode(code, f), code.n - thr, rng, q=code.ctx.q)
print("agreement with the sent word:", column_agreement(encode(code, f), r))

out = list_decode(code, r, w)
print("subspace dimension", out.dimension, "list size", len(out.list))
print("planted message recovered:", any(g == f for g in out.list))

# The brute-force oracle walks all 11^6 messages and must agree.
brute = brute_force_list(code, r, thr)
print("oracle agrees:", [g.key() for g in brute] == [g.key() for g in out.list])

# A larger field, where unique decoding stops at 17 errors and we use 18.
# The subspace is too big to list, so membership is checked by solving.
# Expect this part to take several seconds.
big = ppc_default(field_create(71), 37, 35)
f = big.random_message(rng)
r = corrupt_columns(encode(big, f), 18, rng, q=71)
out = list_decode(big, r, 17)
print("GF(71): dimension", out.dimension, "enumerated", out.enumerated)
print("GF(71): planted message in the subspace:", in_span(big, out.basis, f))
print({k: round(v, 2) for k, v in out.stats["timings"].items()})
