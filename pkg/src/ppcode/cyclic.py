"""The unfolded code of the default instance as a repeated-root cyclic code.

Unfolding reads a code matrix column by column, giving a length-``N``
vector indexed by ``nu = j*m + i``. For ``l1 = x + 1``, ``l2 = gamma*x`` the
resulting code is cyclic, generated by
``g = (x^(q-1) - 1)^p / prod_{j=q-t}^{q-1} (x - gamma^j)^s``
with check polynomial ``h = prod_{j<t} (x - gamma^-j)^s``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .code import PpcCode, encode
from .errors import (
    InexactDivisionError,
    MultiplicityExceedsCharacteristicError,
    NonDefaultInstantiationError,
)
from .gf.field import FieldCtx
from .gf.poly import BiPoly, UniPoly
from .rng import trial_rng


def unfold(c: np.ndarray) -> np.ndarray:
    """``out[m*j + i] = c[i, j]``."""
    return np.asarray(c).T.reshape(-1).copy()


def fold(v: np.ndarray, m: int) -> np.ndarray:
    return np.asarray(v).reshape(-1, m).T.copy()


def shift_polynomial(code: PpcCode, f: BiPoly) -> BiPoly:
    """``f(l1(x), l2(y))`` on an ``s x t`` grid; its codeword is the one-step cyclic shift."""
    msg = code.message_array(f)
    l1, l2 = code.l1, code.l2
    return BiPoly(code.ctx, msg).substitute_affine(l1.a, l1.b, l2.a, l2.b)


def _require_default(code: PpcCode) -> None:
    if not code.is_default:
        raise NonDefaultInstantiationError(
            "the cyclic description holds for l1 = x + 1, l2 = gamma*x, alpha = 0, beta = 1")


def _x_minus(ctx: FieldCtx, root: int) -> UniPoly:
    return UniPoly(ctx, [ctx.neg(root), 1])


def xn_minus_one(ctx: FieldCtx, N: int) -> UniPoly:
    return UniPoly.monomial(ctx, N) - UniPoly.one(ctx)


def generator_poly(code: PpcCode) -> UniPoly:
    _require_default(code)
    ctx = code.ctx
    q, g = ctx.q, ctx.primitive
    num = xn_minus_one(ctx, q - 1) ** ctx.p
    den = UniPoly.one(ctx)
    for j in range(q - code.t, q):
        den = den * _x_minus(ctx, ctx.pow(g, j)) ** code.s
    quot, rem = num.divmod(den)
    if not rem.is_zero():
        raise InexactDivisionError("generator polynomial division left a remainder")
    return quot


def check_poly(code: PpcCode) -> UniPoly:
    """``h = prod_{j<t} (x - gamma^-j)^s``."""
    _require_default(code)
    ctx = code.ctx
    ginv = ctx.inv(ctx.primitive)
    h = UniPoly.one(ctx)
    for j in range(code.t):
        h = h * _x_minus(ctx, ctx.pow(ginv, j)) ** code.s
    return h


def dual_generator_poly(code: PpcCode) -> UniPoly:
    """``prod_{j<t} (x - gamma^j)^s``, which is the monic reversal of ``h``."""
    _require_default(code)
    ctx = code.ctx
    out = UniPoly.one(ctx)
    for j in range(code.t):
        out = out * _x_minus(ctx, ctx.pow(ctx.primitive, j)) ** code.s
    return out


def cyclic_shifts(g: UniPoly, N: int) -> np.ndarray:
    """Rows are ``x^k g(x)`` for ``k < N - deg g``, as length-``N`` vectors."""
    d = g.degree
    out = np.zeros((N - d, N), dtype=np.int64)
    for k in range(N - d):
        out[k, k:k + d + 1] = g.coeffs
    return out


# -- Hasse parity matrix ----------------------------------------------------------


def hasse_parity_matrix(ctx: FieldCtx, beta: int, r: int, N: int) -> np.ndarray:
    """``H[i, j] = (j mod p)^i * beta^j`` for ``i < r``, ``j < N``.

    ``H @ c == 0`` exactly when ``beta`` is a root of ``sum_j c_j x^j`` of
    multiplicity at least ``r``.
    """
    if not 1 <= r <= ctx.p:
        raise MultiplicityExceedsCharacteristicError(f"need 1 <= r <= p = {ctx.p}, got {r}")
    j = np.arange(N, dtype=np.int64) % ctx.p
    bpow = np.empty(N, dtype=np.int64)
    cur = 1
    for k in range(N):
        bpow[k] = cur
        cur = ctx.mul(cur, beta)
    H = np.empty((r, N), dtype=np.int64)
    base = np.ones(N, dtype=np.int64)
    for i in range(r):
        H[i] = ctx.mul(base, bpow)
        base = ctx.mul(base, j)
    return H


def root_multiplicity(poly: UniPoly, beta: int) -> int:
    """Multiplicity of ``beta`` as a root, by repeated exact division; -1 for zero."""
    if poly.is_zero():
        return -1
    lin = _x_minus(poly.field, beta)
    k = 0
    while True:
        quot, rem = poly.divmod(lin)
        if not rem.is_zero():
            return k
        poly, k = quot, k + 1


# -- audit ------------------------------------------------------------------------------


@dataclass
class Clause:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {status}" + (f" ({self.detail})" if self.detail else "")


@dataclass
class CyclicReport:
    clauses: list[Clause]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.clauses)

    def lines(self) -> list[str]:
        return [c.line() for c in self.clauses]

    def __getitem__(self, name: str) -> Clause:
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)


def verify_cyclic_structure(code: PpcCode, trials: int = 100, seed: int = 0,
                            g: UniPoly | None = None) -> CyclicReport:
    """Check the cyclic description on ``trials`` random messages.

    ``g`` overrides the generator polynomial under test, which is how a
    corrupted generator can be fed in as a negative control.
    """
    _require_default(code)
    ctx, N = code.ctx, code.N
    g = generator_poly(code) if g is None else g
    h = check_poly(code)
    xN = xn_minus_one(ctx, N)
    clauses = []

    clauses.append(Clause("power_identity", xN == xn_minus_one(ctx, ctx.q - 1) ** ctx.p))

    shift_fail = div_fail = dual_fail = None
    dual_rows = cyclic_shifts(dual_generator_poly(code), N)
    for trial in range(trials):
        f = code.random_message(trial_rng(seed, trial))
        c = unfold(encode(code, f))
        shifted = unfold(encode(code, shift_polynomial(code, f)))
        if shift_fail is None and not np.array_equal(np.roll(c, -1), shifted):
            shift_fail = trial
        if div_fail is None and not (UniPoly(ctx, c) % g).is_zero():
            div_fail = trial
        if dual_fail is None and ctx.matmul(dual_rows, c[:, None]).any():
            dual_fail = trial

    def failed_at(trial):
        return "" if trial is None else f"seed={seed} trial={trial}"

    clauses.append(Clause("cyclic_shift", shift_fail is None, failed_at(shift_fail)))
    clauses.append(Clause("generator_divides", div_fail is None, failed_at(div_fail)))
    clauses.append(Clause("g_divides_xN_minus_1", (xN % g).is_zero()))
    clauses.append(Clause("degree", g.degree + code.s * code.t == N,
                          f"deg g = {g.degree}, N - s*t = {N - code.s * code.t}"))
    clauses.append(Clause("check_product", g * h == xN))
    clauses.append(Clause("dual_reversal", h.reversed().monic() == dual_generator_poly(code)))
    clauses.append(Clause("dual_orthogonal", dual_fail is None, failed_at(dual_fail)))
    return CyclicReport(clauses)
