"""Linear-algebraic list decoder for permuted product codes.

Pipeline, for a received ``m x n`` matrix ``r`` and a window ``w``:

1. ``interpolate`` finds ``Q = sum_k p_k(x, y) z_k`` with
   ``deg_x p_k <= m - s - w`` and ``deg_y p_k <= D - t`` vanishing on every
   tuple ``(x_nu, y_nu, r[i, j], ..., r[i + w - 1, j])``, ``nu = j*m + i``,
   ``0 <= i <= m - w``.
2. ``reduce_coprime`` strips the factors ``y`` and ``y^(q-1) - gamma`` that
   divide every part, so that ``Q`` is coprime to ``y^q - l2(y)``.
3. ``candidate_subspace`` solves the linear system
   ``sum_k p_k(x, y) f(l1^k(x), l2^k(y)) == 0`` for the coefficients of
   ``f``; its solution space has dimension at most ``w - 1``.
4. ``filter_list`` enumerates that space when it is small enough and keeps
   the messages whose codewords agree with ``r`` on enough columns.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import ceil
from typing import NamedTuple

import numpy as np

from .code import ENUMERATION_CAP, PpcCode, encode_flat, enumerate_span, power_columns
from .errors import (
    DegreesOutOfRangeError,
    DimensionBoundViolatedError,
    InternalNoSolutionError,
    ShapeMismatchError,
    SubspaceTooLargeToEnumerateError,
    UnsupportedAffineMapError,
    WindowOutOfRangeError,
)
from .gf import linalg
from .gf.poly import BiPoly, UniPoly, affine_power_matrix


class Threshold(NamedTuple):
    value: int
    exact: Fraction
    vacuous: bool


@dataclass
class InterpPoly:
    """``Q = sum_k parts[k](x, y) * z_k``; every part shares one grid shape."""

    w: int
    D: int
    parts: list[BiPoly]

    @property
    def shape(self) -> tuple[int, int]:
        return self.parts[0].shape

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.parts)

    def vector(self) -> np.ndarray:
        return np.concatenate([p.coeffs.reshape(-1) for p in self.parts])


@dataclass
class DecodeOutput:
    basis: list[BiPoly]
    list: list[BiPoly] | None
    threshold: int
    enumerated: bool
    interp: InterpPoly
    stats: dict = dc_field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return len(self.basis)


# -- parameters -----------------------------------------------------------------


def _check_window(code: PpcCode, w: int) -> None:
    if not (1 <= w <= code.m - code.s):
        raise WindowOutOfRangeError(f"need 1 <= w <= m - s = {code.m - code.s}, got w={w}")


def _ratio(code: PpcCode, w: int) -> Fraction:
    return Fraction(code.n * code.m, w * (code.m - code.s - w + 1))


def degree_budget(code: PpcCode, w: int) -> int:
    """``D = floor(n*m / (w*(m - s - w + 1))) + t``."""
    _check_window(code, w)
    r = _ratio(code, w)
    return r.numerator // r.denominator + code.t


def agreement_threshold_info(code: PpcCode, w: int) -> Threshold:
    _check_window(code, w)
    exact = _ratio(code, w) + code.t
    value = ceil(exact)
    return Threshold(value, exact, value > code.n)


def agreement_threshold(code: PpcCode, w: int) -> int:
    """Least column agreement that guarantees a message survives decoding."""
    return agreement_threshold_info(code, w).value


def system_size(code: PpcCode, w: int) -> tuple[int, int]:
    """``(constraints, unknowns)`` of the interpolation system."""
    D = degree_budget(code, w)
    return code.n * (code.m - w + 1), w * (D - code.t + 1) * (code.m - code.s - w + 1)


# -- interpolation ---------------------------------------------------------------


def _check_received(code: PpcCode, r) -> np.ndarray:
    r = np.asarray(r, dtype=np.int64)
    if r.shape != (code.m, code.n):
        raise ShapeMismatchError(f"received word must be {code.m}x{code.n}, got {r.shape}")
    return r


def _constraint_index(code: PpcCode, w: int) -> tuple[np.ndarray, np.ndarray]:
    """Row-major over ``(j, i)``: the ``i`` and ``j`` of each constraint."""
    rows = code.m - w + 1
    j, i = np.divmod(np.arange(code.n * rows), rows)
    return i, j


def interpolation_matrix(code: PpcCode, r, w: int) -> np.ndarray:
    """Constraint matrix; column ``k*dx*dy + a*dy + b`` is the unknown for
    the coefficient of ``x^a y^b z_k``."""
    r = _check_received(code, r)
    ctx = code.ctx
    D = degree_budget(code, w)
    dx, dy = code.m - code.s - w + 1, D - code.t + 1
    i, j = _constraint_index(code, w)
    nu = j * code.m + i
    px = power_columns(ctx, code.xs[nu], dx)
    py = power_columns(ctx, code.ys[nu], dy)
    mono = ctx.mul(px[:, :, None], py[:, None, :]).reshape(len(nu), dx * dy)
    blocks = [ctx.mul(mono, r[i + k, j][:, None]) for k in range(w)]
    return np.hstack(blocks)


def _parts_from_vector(code: PpcCode, v: np.ndarray, w: int, D: int) -> list[BiPoly]:
    dx, dy = code.m - code.s - w + 1, D - code.t + 1
    grid = np.asarray(v, dtype=np.int64).reshape(w, dx, dy)
    return [BiPoly(code.ctx, grid[k]) for k in range(w)]


def interpolate(code: PpcCode, r, w: int) -> InterpPoly:
    """First kernel vector of the interpolation system, as an :class:`InterpPoly`."""
    if code.s >= code.m:
        raise DegreesOutOfRangeError("decoding needs s < m")
    D = degree_budget(code, w)
    mat = interpolation_matrix(code, r, w)
    kernel = linalg.nullspace(code.ctx, mat, max_vectors=1)
    if not kernel:
        raise InternalNoSolutionError("interpolation system has only the trivial solution")
    return InterpPoly(w, D, _parts_from_vector(code, kernel[0], w, D))


def constraint_residuals(code: PpcCode, r, Q: InterpPoly) -> np.ndarray:
    """``Q(x_nu, y_nu, r[i, j], ...)`` for every constraint, by direct evaluation."""
    r = _check_received(code, r)
    ctx = code.ctx
    i, j = _constraint_index(code, Q.w)
    nu = j * code.m + i
    xs, ys = code.xs[nu], code.ys[nu]
    acc = np.zeros(len(nu), dtype=np.int64)
    for k, part in enumerate(Q.parts):
        acc = ctx.add(acc, ctx.mul(part(xs, ys), r[i + k, j]))
    return acc


# -- coprimality ---------------------------------------------------------------------


def splitting_poly_y(code: PpcCode) -> UniPoly:
    """``y^q - l2(y)``."""
    ctx = code.ctx
    return UniPoly.monomial(ctx, ctx.q) - UniPoly(ctx, [code.l2.b, code.l2.a])


def common_y_factor(code: PpcCode, Q: InterpPoly) -> UniPoly:
    """``gcd`` of ``y^q - l2(y)`` with every part of ``Q``.

    A polynomial in ``y`` alone divides ``Q`` exactly when it divides each
    x-coefficient of each part, so this is ``gcd(Q, y^q - l2(y))``.
    """
    ctx = code.ctx
    g = splitting_poly_y(code)
    for part in Q.parts:
        for row in part.coeffs:
            if row.any():
                g = g.gcd(UniPoly(ctx, row))
                if g.degree == 0:
                    return g
    return g.monic()


def is_coprime(code: PpcCode, Q: InterpPoly) -> bool:
    return common_y_factor(code, Q).degree == 0


def reduce_coprime(code: PpcCode, Q: InterpPoly) -> InterpPoly:
    """Divide out ``y`` and then ``y^(q-1) - gamma`` while they divide every part.

    Only ``l2 = gamma*x`` with ``gamma`` primitive is supported: then these
    two are the irreducible factors of ``y^q - l2(y)``.
    """
    ctx = code.ctx
    l2 = code.l2
    if l2.b != 0 or ctx.order(l2.a) != ctx.q - 1:
        raise UnsupportedAffineMapError(
            f"coprimality reduction needs l2 = gamma*x with gamma primitive, got {l2}")
    if Q.is_zero():
        raise InternalNoSolutionError("cannot reduce the zero polynomial")
    shape = Q.shape
    parts = [p.coeffs.copy() for p in Q.parts]
    while all(not p[:, 0].any() for p in parts):
        parts = [np.concatenate([p[:, 1:], np.zeros((p.shape[0], 1), np.int64)], axis=1)
                 for p in parts]
    factor = UniPoly.monomial(ctx, ctx.q - 1) - UniPoly(ctx, [l2.a])
    polys = [BiPoly(ctx, p) for p in parts]
    while True:
        divided = [p.divmod_y(factor) for p in polys]
        if any(not rem.is_zero() for _, rem in divided):
            break
        polys = [quot.padded(*shape) for quot, _ in divided]
    return InterpPoly(Q.w, Q.D, [BiPoly(ctx, p.coeffs) for p in polys])


# -- candidate subspace ----------------------------------------------------------


def _shifted(u: np.ndarray, shifts: int, width: int) -> np.ndarray:
    """``out[d, a, X] = u[a, X - d]`` (zero outside the range of ``u``)."""
    k = u.shape[1]
    out = np.zeros((shifts, u.shape[0], width), dtype=np.int64)
    for d in range(shifts):
        out[d, :, d:d + k] = u[:, : width - d]
    return out


def candidate_matrix(code: PpcCode, Q: InterpPoly) -> np.ndarray:
    """Matrix of ``f -> sum_k p_k(x, y) f(l1^k(x), l2^k(y))``.

    Columns index the coefficients of ``f`` (``a*t + b``); rows index the
    coefficients of the image (``X*D + Y`` with ``X < m - w``, ``Y < D``).
    """
    ctx = code.ctx
    s, t, D = code.s, code.t, Q.D
    nx = code.m - Q.w
    dx, dy = Q.shape
    out = np.zeros((nx, D, s, t), dtype=np.int64)
    for k, part in enumerate(Q.parts):
        if part.is_zero():
            continue
        lk1, lk2 = code.l1.power(k), code.l2.power(k)
        # Row a of u holds the coefficients of l1^k(x)^a; likewise v for y.
        su = _shifted(affine_power_matrix(ctx, lk1.a, lk1.b, s), dx, nx)
        sv = _shifted(affine_power_matrix(ctx, lk2.a, lk2.b, t), dy, D)
        # image[X, Y, a, b] = sum_{a', b'} part[a', b'] su[a', a, X] sv[b', b, Y]
        inner = ctx.matmul(part.coeffs, sv.reshape(dy, t * D))
        img = ctx.matmul(su.reshape(dx, s * nx).T, inner)
        out = ctx.add(out, img.reshape(s, nx, t, D).transpose(1, 3, 0, 2))
    return out.reshape(nx * D, s * t)


def qhat(code: PpcCode, Q: InterpPoly, f: BiPoly) -> BiPoly:
    """``sum_k p_k(x, y) f(l1^k(x), l2^k(y))`` by direct polynomial arithmetic."""
    ctx = code.ctx
    acc = BiPoly.zeros(ctx, 1, 1)
    for k, part in enumerate(Q.parts):
        lk1, lk2 = code.l1.power(k), code.l2.power(k)
        acc = acc + part * f.substitute_affine(lk1.a, lk1.b, lk2.a, lk2.b)
    return acc


def candidate_subspace(code: PpcCode, Q: InterpPoly) -> list[BiPoly]:
    """Basis of ``{f : deg_x f < s, deg_y f < t, Qhat_f == 0}``."""
    mat = candidate_matrix(code, Q)
    basis = linalg.nullspace(code.ctx, mat)
    if len(basis) > Q.w - 1:
        raise DimensionBoundViolatedError(
            f"candidate subspace has dimension {len(basis)} > w - 1 = {Q.w - 1}")
    return [code.message_poly(v) for v in basis]


def in_span(code: PpcCode, basis: list[BiPoly], f) -> bool:
    """Whether message ``f`` lies in the span of ``basis``."""
    vec = code.message_array(f).reshape(-1)
    rows = np.array([code.message_array(b).reshape(-1) for b in basis], dtype=np.int64)
    return linalg.in_span(code.ctx, rows.reshape(len(basis), vec.size), vec)


# -- filtering ---------------------------------------------------------------------


def filter_list(code: PpcCode, basis: list[BiPoly], r, threshold: int,
                cap: int = ENUMERATION_CAP) -> list[BiPoly]:
    """Messages in ``span(basis)`` whose codewords agree with ``r`` on
    ``>= threshold`` columns, sorted by coefficient tuple."""
    r = _check_received(code, r)
    ctx = code.ctx
    k = len(basis)
    if ctx.q**k > cap:
        raise SubspaceTooLargeToEnumerateError(
            f"span of {k} vectors has {ctx.q}^{k} elements, above the cap {cap}")
    vecs = np.array([code.message_array(b).reshape(-1) for b in basis],
                    dtype=np.int64).reshape(k, code.dimension)
    words = encode_flat(code, vecs)
    target = r.T.reshape(-1)
    found = []
    for coeffs, cw in enumerate_span(ctx, words):
        agree = np.all((cw == target).reshape(len(cw), code.n, code.m), axis=2).sum(axis=1)
        hit = np.flatnonzero(agree >= threshold)
        if hit.size:
            found.extend(tuple(m.tolist()) for m in ctx.matmul(coeffs[hit], vecs))
    found = sorted(set(found))
    return [code.message_poly(np.array(m, dtype=np.int64)) for m in found]


# -- full pipeline -----------------------------------------------------------------


def list_decode(code: PpcCode, r, w: int, threshold: int | None = None,
                cap: int = ENUMERATION_CAP) -> DecodeOutput:
    if code.s >= code.m:
        raise DegreesOutOfRangeError("decoding needs s < m")
    r = _check_received(code, r)
    info = agreement_threshold_info(code, w)
    thr = info.value if threshold is None else int(threshold)
    constraints, unknowns = system_size(code, w)
    timings = {}

    t0 = time.perf_counter()
    raw = interpolate(code, r, w)
    t1 = time.perf_counter()
    Q = reduce_coprime(code, raw)
    t2 = time.perf_counter()
    basis = candidate_subspace(code, Q)
    t3 = time.perf_counter()
    try:
        out_list = filter_list(code, basis, r, thr, cap)
        enumerated = True
    except SubspaceTooLargeToEnumerateError:
        out_list, enumerated = None, False
    t4 = time.perf_counter()
    timings.update(interpolate=t1 - t0, reduce=t2 - t1, subspace=t3 - t2, filter=t4 - t3)

    stats = {
        "D": Q.D,
        "constraints": constraints,
        "unknowns": unknowns,
        "dimension": len(basis),
        "threshold_exact": str(info.exact),
        "threshold_vacuous": info.vacuous,
        "reduction_applied": raw != Q,
        "timings": timings,
    }
    return DecodeOutput(basis, out_list, thr, enumerated, Q, stats)
