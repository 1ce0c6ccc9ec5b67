"""Column-error channel."""

from __future__ import annotations

import numpy as np

from ..errors import TooManyErrorsError


def corrupt_columns(c: np.ndarray, e: int, rng: np.random.Generator, *, q: int,
                    return_positions: bool = False):
    """Replace ``e`` distinct random columns of ``c`` by uniform random columns.

    Each replacement is drawn uniformly from the ``q**m - 1`` columns that
    differ from the original, so exactly ``n - e`` columns survive.
    """
    c = np.asarray(c, dtype=np.int64)
    m, n = c.shape
    if not 0 <= e <= n:
        raise TooManyErrorsError(f"cannot corrupt {e} of {n} columns")
    out = c.copy()
    cols = np.sort(rng.choice(n, size=e, replace=False)) if e else np.zeros(0, dtype=np.int64)
    for j in cols:
        while True:
            new = rng.integers(0, q, size=m, dtype=np.int64)
            if not np.array_equal(new, c[:, j]):
                break
        out[:, j] = new
    return (out, cols) if return_positions else out
