"""Permuted product codes: construction, encoding and structural checks.

A code is fixed by two affine maps ``l1``, ``l2`` of coprime orders ``m``
and ``n`` and two starting points ``alpha``, ``beta``. Writing
``nu = j*m + i``, the codeword of a message ``f(x, y)`` (``deg_x < s``,
``deg_y < t``) is the ``m x n`` matrix with entries
``f(l1^nu(alpha), l2^nu(beta))``. Each column is one code symbol.

Code matrices are plain ``int64`` arrays of serialized field elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd

import numpy as np

from .affine import AffineMap
from .errors import (
    DegreeTooLargeError,
    DegreesOutOfRangeError,
    FixedPointError,
    NonCoprimeOrdersError,
    ShapeMismatchError,
    TooLargeToEnumerateError,
    UnsupportedFieldError,
)
from .gf import linalg
from .gf.field import FieldCtx
from .gf.poly import BiPoly

ENUMERATION_CAP = 10**6


def power_columns(field: FieldCtx, pts: np.ndarray, k: int) -> np.ndarray:
    """``out[v, e] = pts[v] ** e`` for ``e < k``."""
    pts = np.asarray(pts, dtype=np.int64)
    out = np.empty((len(pts), k), dtype=np.int64)
    if k:
        out[:, 0] = 1
    for e in range(1, k):
        out[:, e] = field.mul(out[:, e - 1], pts)
    return out


@dataclass(frozen=True, eq=False)
class PpcCode:
    ctx: FieldCtx
    l1: AffineMap
    l2: AffineMap
    alpha: int
    beta: int
    s: int
    t: int
    m: int = dc_field(init=False)
    n: int = dc_field(init=False)
    minv: int = dc_field(init=False)
    xs: np.ndarray = dc_field(init=False, repr=False)
    ys: np.ndarray = dc_field(init=False, repr=False)
    A: np.ndarray = dc_field(init=False, repr=False)
    B: np.ndarray = dc_field(init=False, repr=False)

    def __post_init__(self):
        ctx, l1, l2 = self.ctx, self.l1, self.l2
        if l1.field != ctx or l2.field != ctx:
            raise ValueError("affine maps must live over the code's field")
        m, n = l1.order(), l2.order()
        if gcd(m, n) != 1:
            raise NonCoprimeOrdersError(f"orders {m} and {n} are not coprime")
        if l1.is_fixed_point(self.alpha):
            raise FixedPointError(f"alpha={self.alpha} is fixed by {l1}")
        if l2.is_fixed_point(self.beta):
            raise FixedPointError(f"beta={self.beta} is fixed by {l2}")
        if not (1 <= self.s <= m and 1 <= self.t <= n):
            raise DegreesOutOfRangeError(
                f"need 1 <= s <= {m} and 1 <= t <= {n}, got s={self.s}, t={self.t}")
        N = m * n
        xs = l1.orbit_array(self.alpha, N)
        ys = l2.orbit_array(self.beta, N)
        pairs = xs * ctx.q + ys
        if np.unique(pairs).size != N:
            raise ValueError("evaluation points are not pairwise distinct")
        derived = dict(m=m, n=n, minv=pow(m, -1, n) if n > 1 else 0, xs=xs, ys=ys,
                       A=xs[:m].copy(), B=l2.power(m).orbit_array(self.beta, n))
        for k, v in derived.items():
            object.__setattr__(self, k, v)
        for arr in (xs, ys, self.A, self.B):
            arr.setflags(write=False)

    # -- derived quantities ---------------------------------------------------

    @property
    def N(self) -> int:
        return self.m * self.n

    @property
    def dimension(self) -> int:
        return self.s * self.t

    @property
    def rate(self) -> Fraction:
        return Fraction(self.s * self.t, self.m * self.n)

    @property
    def l2m(self) -> AffineMap:
        return self.l2.power(self.m)

    @property
    def is_default(self) -> bool:
        c = self.ctx
        return (self.l1 == AffineMap(c, 1, 1) and self.l2 == AffineMap(c, c.primitive, 0)
                and self.alpha == 0 and self.beta == 1)

    @property
    def eval_table(self) -> np.ndarray:
        """``(N, 2)`` array of evaluation pairs indexed by ``nu``."""
        return np.stack([self.xs, self.ys], axis=1)

    def grid(self, arr: np.ndarray) -> np.ndarray:
        """Reshape a length-``N`` vector indexed by ``nu`` into ``m x n``."""
        return np.asarray(arr).reshape(self.n, self.m).T

    def __repr__(self) -> str:
        return (f"PpcCode({self.ctx!r}, l1={self.l1}, l2={self.l2}, alpha={self.alpha}, "
                f"beta={self.beta}, m={self.m}, n={self.n}, s={self.s}, t={self.t})")

    # -- generator matrix -----------------------------------------------------

    @property
    def generator(self) -> np.ndarray:
        """``(s*t, N)`` matrix; row ``a*t + b`` is the evaluation of ``x^a y^b``."""
        g = self.__dict__.get("_generator")
        if g is None:
            px = power_columns(self.ctx, self.xs, self.s)
            py = power_columns(self.ctx, self.ys, self.t)
            g = self.ctx.mul(px[:, :, None], py[:, None, :]).reshape(self.N, -1).T.copy()
            g.setflags(write=False)
            object.__setattr__(self, "_generator", g)
        return g

    def message_array(self, f) -> np.ndarray:
        """Coefficients of ``f`` as an ``(s, t)`` array, checking degrees."""
        c = f.coeffs if isinstance(f, BiPoly) else np.asarray(f, dtype=np.int64)
        if isinstance(f, BiPoly):
            self.ctx.check_same(f.field)
        if c.ndim != 2:
            raise ValueError("message must be a 2-D coefficient grid")
        if c[self.s:].any() or c[:, self.t:].any():
            raise DegreeTooLargeError(
                f"message degrees must satisfy deg_x < {self.s}, deg_y < {self.t}")
        out = np.zeros((self.s, self.t), dtype=np.int64)
        h, w = min(c.shape[0], self.s), min(c.shape[1], self.t)
        out[:h, :w] = c[:h, :w]
        return out

    def message_poly(self, arr) -> BiPoly:
        return BiPoly(self.ctx, np.asarray(arr, dtype=np.int64).reshape(self.s, self.t))

    def random_message(self, rng: np.random.Generator) -> BiPoly:
        return BiPoly(self.ctx, self.ctx.random(rng, (self.s, self.t)))


def ppc_code(ctx: FieldCtx, l1: AffineMap, l2: AffineMap, alpha: int, beta: int,
             s: int, t: int) -> PpcCode:
    """Custom instance; every structural invariant is validated."""
    return PpcCode(ctx, l1, l2, int(alpha), int(beta), int(s), int(t))


def ppc_default(ctx: FieldCtx, s: int, t: int) -> PpcCode:
    """``l1 = x + 1``, ``l2 = gamma*x``, ``alpha = 0``, ``beta = 1``; ``m = p``, ``n = q - 1``."""
    if ctx.q <= 2:
        raise UnsupportedFieldError("the default instance needs q > 2")
    if not (1 <= s <= ctx.p and 1 <= t <= ctx.q - 1):
        raise DegreesOutOfRangeError(
            f"need 1 <= s <= {ctx.p} and 1 <= t <= {ctx.q - 1}, got s={s}, t={t}")
    return PpcCode(ctx, AffineMap(ctx, 1, 1), AffineMap(ctx, ctx.primitive, 0), 0, 1, s, t)


# -- encoding -------------------------------------------------------------------


def encode_flat(code: PpcCode, msgs: np.ndarray) -> np.ndarray:
    """Unfolded codewords (indexed by ``nu``) of flattened messages ``(..., s*t)``."""
    msgs = np.asarray(msgs, dtype=np.int64)
    lead = msgs.shape[:-1]
    out = code.ctx.matmul(msgs.reshape(-1, code.dimension), code.generator)
    return out.reshape(*lead, code.N)


def encode_many(code: PpcCode, msgs: np.ndarray) -> np.ndarray:
    """Encode a stack ``(k, s, t)`` of coefficient grids into ``(k, m, n)``."""
    msgs = np.asarray(msgs, dtype=np.int64)
    flat = encode_flat(code, msgs.reshape(len(msgs), -1))
    return flat.reshape(len(msgs), code.n, code.m).transpose(0, 2, 1)


def encode(code: PpcCode, f) -> np.ndarray:
    """The ``m x n`` codeword matrix of ``f``."""
    msg = code.message_array(f)
    return code.grid(encode_flat(code, msg.reshape(-1))).copy()


def encode_via_tensor(code: PpcCode, f) -> np.ndarray:
    """Encode through the tensor codeword ``f(A[i], B[j])`` and row shifts.

    Row ``i`` of the tensor codeword is rotated left by ``i * minv mod n``.
    """
    ctx = code.ctx
    msg = code.message_array(f)
    va = power_columns(ctx, code.A, code.s)
    vb = power_columns(ctx, code.B, code.t)
    tensor = ctx.matmul(ctx.matmul(va, msg), vb.T)
    i = np.arange(code.m)[:, None]
    j = np.arange(code.n)[None, :]
    return tensor[i, (j + i * code.minv) % code.n]


# -- Reed-Solomon rows ----------------------------------------------------------------


def _rs_extension_matrix(code: PpcCode) -> np.ndarray:
    """``(n, t)`` matrix taking values on ``B[:t]`` to the interpolant's values on ``B``."""
    cached = code.__dict__.get("_rs_ext")
    if cached is not None:
        return cached
    ctx, t = code.ctx, code.t
    vb = power_columns(ctx, code.B, t)
    aug = np.hstack([vb[:t], np.eye(t, dtype=np.int64)])
    red, piv = linalg.rref(ctx, aug)
    if piv != list(range(t)):
        raise RuntimeError("evaluation points of B are not distinct")
    ext = ctx.matmul(vb, red[:, t:])
    ext.setflags(write=False)
    object.__setattr__(code, "_rs_ext", ext)
    return ext


def rows_in_rs(code: PpcCode, rows: np.ndarray) -> np.ndarray:
    """Vectorized :func:`row_in_rs` over the last axis of ``rows``."""
    rows = np.asarray(rows, dtype=np.int64)
    if rows.shape[-1] != code.n:
        raise ShapeMismatchError(f"rows must have length n={code.n}")
    ext = _rs_extension_matrix(code)
    flat = rows.reshape(-1, code.n)
    pred = code.ctx.matmul(flat[:, : code.t], ext.T)
    return np.all(pred == flat, axis=1).reshape(rows.shape[:-1])


def row_in_rs(code: PpcCode, row) -> bool:
    """Whether ``row`` is the evaluation on ``B`` of a polynomial of degree < t.

    The polynomial is interpolated from the first ``t`` points and then
    re-evaluated everywhere.
    """
    return bool(rows_in_rs(code, np.asarray(row)[None, :])[0])


def column_agreement(a: np.ndarray, b: np.ndarray) -> int:
    """Number of columns on which two code matrices coincide."""
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise ShapeMismatchError(f"shapes {a.shape} and {b.shape} differ")
    return int(np.all(a == b, axis=-2).sum(axis=-1))


def column_agreements(stack: np.ndarray, r: np.ndarray) -> np.ndarray:
    """Agreement of every matrix in ``stack`` with ``r``."""
    return np.all(np.asarray(stack) == np.asarray(r)[None], axis=1).sum(axis=1)


# -- enumeration --------------------------------------------------------------------


def enumerate_span(field: FieldCtx, basis: np.ndarray, chunk: int = 1 << 14):
    """Yield ``(coeffs, vectors)`` chunks covering every combination of ``basis`` rows.

    Coefficient tuples come out in lexicographic order, first basis vector
    most significant.
    """
    basis = np.asarray(basis, dtype=np.int64)
    k = basis.shape[0]
    q = field.q
    total = q**k
    place = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    for lo in range(0, total, chunk):
        idx = np.arange(lo, min(total, lo + chunk), dtype=np.int64)
        coeffs = (idx[:, None] // place[None, :]) % q
        if k == 0:
            yield coeffs, np.zeros((len(idx), basis.shape[1]), dtype=np.int64)
        else:
            yield coeffs, field.matmul(coeffs, basis)


def min_distance_exhaustive(code: PpcCode, cap: int = ENUMERATION_CAP) -> tuple[int, int]:
    """Exact ``(column distance, unfolded symbol distance)`` by full enumeration."""
    q, k = code.ctx.q, code.dimension
    if q**k > cap:
        raise TooLargeToEnumerateError(f"q^(s*t) = {q}^{k} exceeds the cap {cap}")
    best_col, best_sym = code.n + 1, code.N + 1
    for _, words in enumerate_span(code.ctx, code.generator, chunk=1 << 15):
        nz = words != 0
        sym = nz.sum(axis=1)
        col = nz.reshape(len(words), code.n, code.m).any(axis=2).sum(axis=1)
        live = sym > 0
        if live.any():
            best_sym = min(best_sym, int(sym[live].min()))
            best_col = min(best_col, int(col[live].min()))
    return best_col, best_sym
