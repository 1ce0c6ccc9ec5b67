"""Exhaustive list decoding, used as an independent reference."""

from __future__ import annotations

import numpy as np

from ..code import PpcCode
from ..errors import TooLargeToEnumerateError
from ..gf.poly import BiPoly

ORACLE_CAP = 10**7


def brute_force_list(code: PpcCode, r: np.ndarray, threshold: int,
                     cap: int = ORACLE_CAP) -> list[BiPoly]:
    """Every message whose codeword agrees with ``r`` on ``>= threshold`` columns.

    Messages are visited in lexicographic order of their flattened
    coefficient grids, which is also the order of the result. Each message
    is split into a high and a low half; the codewords of all low halves are
    tabulated once, and for each high half the whole table is compared
    against ``r`` minus the high half's codeword.
    """
    ctx = code.ctx
    q, k = ctx.q, code.dimension
    if q**k > cap:
        raise TooLargeToEnumerateError(f"{q}^{k} messages exceed the cap {cap}")
    r = np.asarray(r, dtype=np.int64)
    target = r.T.reshape(-1)
    gen = code.generator
    k_lo = k // 2
    lo_msgs = _all_tuples(q, k_lo)
    hi_msgs = _all_tuples(q, k - k_lo)
    lo_words = ctx.matmul(lo_msgs, gen[k - k_lo:])
    hi_words = ctx.matmul(hi_msgs, gen[: k - k_lo])
    hits = []
    for hi, word in zip(hi_msgs, hi_words):
        need = ctx.sub(target, word)
        eq = (lo_words == need).reshape(len(lo_msgs), code.n, code.m)
        agree = eq.all(axis=2).sum(axis=1)
        for lo in np.flatnonzero(agree >= threshold):
            hits.append(np.concatenate([hi, lo_msgs[lo]]))
    return [code.message_poly(h) for h in hits]


def _all_tuples(q: int, k: int) -> np.ndarray:
    """All of ``range(q)**k`` in lexicographic order, shape ``(q**k, k)``."""
    idx = np.arange(q**k, dtype=np.int64)
    place = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // place[None, :]) % q
