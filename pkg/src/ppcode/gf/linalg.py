"""Dense linear algebra over GF(p^r): reduced row echelon form and kernels.

Prime fields with small characteristic take a recursive column-blocked
Gauss-Jordan elimination whose updates are float64 BLAS products, exact as
long as every partial sum stays below 2**53. Other fields fall back to a
row-at-a-time elimination built on the field's vectorized operations. Both
paths pick pivots in the same order (leftmost column, topmost unused row),
and the reduced echelon form is unique, so their outputs coincide.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from .field import FieldCtx

_EXACT = float(2**52)
# Above this characteristic float products lose exactness; use object ints.
_FAST_P_LIMIT = 1 << 25


def _bmod(x: np.ndarray, p: int) -> np.ndarray:
    """In-place reduction of an integral float array to balanced residues.

    Results lie in roughly [-p/2, p/2]; zero residues come out as exact 0.
    """
    t = np.multiply(x, 1.0 / p)
    np.rint(t, out=t)
    t *= p
    x -= t
    return x


def _chunk(p: int) -> int:
    half = p // 2 + 1
    return max(1, int(_EXACT // (half * half)))


def _matmul_balanced(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Product of balanced-residue float arrays, reduced to balanced residues."""
    k = a.shape[1]
    step = _chunk(p)
    if k <= step:
        return _bmod(a @ b, p)
    out = np.zeros((a.shape[0], b.shape[1]))
    for lo in range(0, k, step):
        out += _bmod(a[:, lo:lo + step] @ b[lo:lo + step], p)
        _bmod(out, p)
    return out


def _to_balanced(a, p: int) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64) % p
    a = np.where(a > p // 2, a - p, a)
    return a.astype(np.float64)


def _from_balanced(a: np.ndarray, p: int) -> np.ndarray:
    return np.rint(a).astype(np.int64) % p


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """``a @ b mod p`` for arrays of residues in [0, p); result as int64."""
    if p >= _FAST_P_LIMIT:
        prod = np.asarray(a).astype(object) @ np.asarray(b).astype(object)
        return (prod % p).astype(np.int64)
    a = np.asarray(a)
    if a.shape[1] * (p - 1) ** 2 < _EXACT:
        # Nonnegative residues: the plain float product is already exact.
        prod = np.asarray(a, dtype=np.float64) @ np.asarray(b, dtype=np.float64)
        np.fmod(prod, p, out=prod)
        return prod.astype(np.int64)
    return _from_balanced(_matmul_balanced(_to_balanced(a, p), _to_balanced(b, p), p), p)


class _Stop(Exception):
    pass


class _PrimeEliminator:
    """Recursive blocked Gauss-Jordan elimination mod a small prime.

    Entries are kept as balanced residues in a column-major float array. A
    processed column block is summarized by a transformation
    ``a -> a - W @ (M @ a[I])`` acting on every later column ``a``; ``I``
    lists the new pivot rows. Two adjacent transformations compose into one
    of the same shape, so the update applied to a trailing block is always a
    pair of large matrix products.
    """

    def __init__(self, a: np.ndarray, p: int, max_free: int | None = None):
        self.a = a
        self.p = p
        self.used = np.zeros(a.shape[0], dtype=bool)
        self.pivots: list[tuple[int, int]] = []
        self.free: list[int] = []
        self.max_free = max_free

    def run(self) -> None:
        if self.a.shape[1]:
            try:
                self._reduce(0, self.a.shape[1], need=False)
            except _Stop:
                pass

    def _leaf(self, c: int):
        p = self.p
        col = self.a[:, c]
        cand = np.flatnonzero((col != 0) & ~self.used)
        if cand.size == 0:
            self.free.append(c)
            if self.max_free is not None and len(self.free) >= self.max_free:
                raise _Stop
            return None
        i = int(cand[0])
        piv = int(col[i]) % p
        w = col.copy()
        w[i] -= 1
        col[:] = 0
        col[i] = 1
        self.used[i] = True
        self.pivots.append((i, c))
        inv = pow(piv, p - 2, p)
        if inv > p // 2:
            inv -= p
        return np.array([i]), w[:, None], np.array([[float(inv)]])

    def _apply(self, t, lo: int, hi: int) -> None:
        rows, w, m = t
        block = self.a[:, lo:hi]
        z = _matmul_balanced(m, block[rows], self.p)
        if w.shape[1] <= _chunk(self.p) // 2:
            block -= w @ z
            _bmod(block, self.p)
        else:
            block -= _matmul_balanced(w, z, self.p)
            _bmod(block, self.p)

    def _merge(self, t1, t2):
        if t1 is None:
            return t2
        if t2 is None:
            return t1
        i1, w1, m1 = t1
        i2, w2, m2 = t2
        k1, k2 = len(i1), len(i2)
        p = self.p
        m = np.zeros((k1 + k2, k1 + k2))
        m[:k1, :k1] = m1
        m[k1:, k1:] = m2
        m[k1:, :k1] = -_matmul_balanced(m2, _matmul_balanced(w1[i2], m1, p), p)
        return np.concatenate([i1, i2]), np.hstack([w1, w2]), m

    def _reduce(self, c0: int, c1: int, need: bool):
        if c1 - c0 == 1:
            return self._leaf(c0)
        mid = (c0 + c1) // 2
        t1 = self._reduce(c0, mid, need=True)
        if t1 is not None:
            self._apply(t1, mid, c1)
        t2 = self._reduce(mid, c1, need=need)
        return self._merge(t1, t2) if need else None


def _rref_generic(field: "FieldCtx", a: np.ndarray, max_free: int | None = None):
    rows, cols = a.shape
    used = np.zeros(rows, dtype=bool)
    pivots = []
    free = []
    for c in range(cols):
        cand = np.flatnonzero((a[:, c] != 0) & ~used)
        if cand.size == 0:
            free.append(c)
            if max_free is not None and len(free) >= max_free:
                break
            continue
        i = int(cand[0])
        a[i] = field.mul(a[i], field.inv(int(a[i, c])))
        others = np.flatnonzero(a[:, c] != 0)
        others = others[others != i]
        if others.size:
            factors = a[others, c]
            a[others] = field.sub(a[others], field.mul(factors[:, None], a[i][None, :]))
        used[i] = True
        pivots.append((i, c))
    return a, pivots, free


def _eliminate(field: "FieldCtx", mat, max_free: int | None = None):
    a = np.array(mat, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    rows, cols = a.shape
    if rows == 0 or cols == 0:
        free = list(range(cols))
        if max_free is not None:
            free = free[:max_free]
        return np.zeros((0, cols), dtype=np.int64), [], free
    if field.r == 1 and field.p < _FAST_P_LIMIT:
        elim = _PrimeEliminator(np.asfortranarray(_to_balanced(a, field.p)), field.p, max_free)
        elim.run()
        reduced, pivots, free = _from_balanced(elim.a, field.p), elim.pivots, elim.free
    else:
        reduced, pivots, free = _rref_generic(field, a, max_free)
    order = sorted(pivots, key=lambda rc: rc[1])
    return reduced[[r for r, _ in order]], [c for _, c in order], free


def rref(field: "FieldCtx", mat) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.

    The result has ``len(pivot_cols)`` rows; zero rows are dropped.
    """
    reduced, pivots, _ = _eliminate(field, mat)
    return reduced, pivots


def rank(field: "FieldCtx", mat) -> int:
    return len(rref(field, mat)[1])


def nullspace(field: "FieldCtx", mat, max_vectors: int | None = None) -> list[np.ndarray]:
    """Kernel basis of ``mat`` (vectors ``v`` with ``mat @ v == 0``).

    One vector per free column, in increasing column order, normalized to 1
    at its own free column and 0 at the others. ``max_vectors`` truncates the
    list without changing the vectors that are returned.
    """
    mat = np.asarray(mat, dtype=np.int64)
    cols = mat.shape[1]
    if max_vectors is not None and max_vectors <= 0:
        return []
    red, piv, free = _eliminate(field, mat, max_vectors)
    if max_vectors is None:
        # Trailing columns after the last pivot are free as well.
        pivset = set(piv)
        free = [c for c in range(cols) if c not in pivset]
    basis = []
    for f in free:
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        live = [k for k, c in enumerate(piv) if c < f]
        if live:
            v[[piv[k] for k in live]] = field.neg(red[live, f])
        basis.append(v)
    return basis


def solve_in_span(field: "FieldCtx", basis, v) -> np.ndarray | None:
    """Coefficients ``c`` with ``c @ basis == v``, or None if ``v`` is outside the span."""
    basis = np.asarray(basis, dtype=np.int64).reshape(-1, len(v))
    v = np.asarray(v, dtype=np.int64)
    k = basis.shape[0]
    if k == 0:
        return np.zeros(0, dtype=np.int64) if not np.any(v) else None
    # Kernel of [basis^T | -v]: a vector with last coordinate 1 gives c.
    aug = np.hstack([basis.T, field.neg(v)[:, None]])
    red, piv = rref(field, aug)
    if k in piv:
        return None
    c = np.zeros(k, dtype=np.int64)
    for row, col in enumerate(piv):
        c[col] = field.neg(red[row, k])
    return c


def in_span(field: "FieldCtx", basis, v) -> bool:
    return solve_in_span(field, basis, v) is not None
