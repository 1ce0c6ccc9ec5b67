"""Structural audits behind the ``verify`` subcommand."""

from __future__ import annotations

import numpy as np

from ..affine import AffineMap
from ..code import (
    ENUMERATION_CAP,
    PpcCode,
    encode_many,
    encode_via_tensor,
    min_distance_exhaustive,
    rows_in_rs,
)
from ..cyclic import Clause, verify_cyclic_structure
from ..gf.field import FieldCtx
from ..gf.splitting import linear_roots, splitting_degree_profile
from ..rng import trial_rng

# Exhaustive profiling walks all q(q-1) affine maps.
PROFILE_LIMIT = 16


def audit_field(ctx: FieldCtx, trials: int, seed: int) -> list[Clause]:
    rng = trial_rng(seed, 0)
    a, b, c = (ctx.random(rng, trials) for _ in range(3))
    nz = ctx.random(rng, trials, nonzero=True)
    add, mul = ctx.add, ctx.mul
    out = [
        Clause("field_associative",
               bool(np.array_equal(mul(mul(a, b), c), mul(a, mul(b, c)))
                    and np.array_equal(add(add(a, b), c), add(a, add(b, c))))),
        Clause("field_distributive",
               bool(np.array_equal(mul(a, add(b, c)), add(mul(a, b), mul(a, c))))),
        Clause("field_inverse", bool(np.all(mul(nz, ctx.inv(nz)) == 1))),
        Clause("field_fermat", bool(np.all(ctx.pow(nz, ctx.q - 1) == 1))),
        Clause("field_frobenius_additive",
               bool(np.array_equal(ctx.pow(add(a, b), ctx.p),
                                   add(ctx.pow(a, ctx.p), ctx.pow(b, ctx.p))))),
        Clause("field_primitive_order", ctx.order(ctx.primitive) == ctx.q - 1),
    ]
    if ctx.q <= PROFILE_LIMIT:
        bad = []
        for la in range(1, ctx.q):
            for lb in range(ctx.q):
                l = AffineMap(ctx, la, lb)
                prof = splitting_degree_profile(ctx, l)
                fixed = l.fixed_points()
                if (not set(prof) <= {1, l.order()} or prof.get(1, 0) != len(fixed)
                        or linear_roots(ctx, l) != fixed):
                    bad.append(str(l))
        out.append(Clause("splitting_profile", not bad, ", ".join(bad[:3])))
    return out


def audit_code(code: PpcCode, trials: int, seed: int,
               cap: int = ENUMERATION_CAP) -> list[Clause]:
    rng = trial_rng(seed, 1)
    msgs = code.ctx.random(rng, (trials, code.s, code.t))
    words = encode_many(code, msgs)
    tensor_bad = next((k for k in range(trials)
                       if not np.array_equal(words[k], encode_via_tensor(code, msgs[k]))), None)
    rs_ok = bool(rows_in_rs(code, words).all())
    out = [
        Clause("encode_matches_tensor", tensor_bad is None,
               "" if tensor_bad is None else f"seed={seed} message={tensor_bad}"),
        Clause("rows_in_rs", rs_ok),
    ]
    if code.ctx.q ** code.dimension <= cap:
        col, sym = min_distance_exhaustive(code, cap)
        expect = (code.m - code.s + 1) * (code.n - code.t + 1)
        out.append(Clause("column_distance", col >= code.n - code.t + 1,
                          f"exact {col}, bound {code.n - code.t + 1}"))
        if code.is_default:
            out.append(Clause("unfolded_distance", sym == expect,
                              f"exact {sym}, formula {expect}"))
    return out


def audit_all(code: PpcCode, trials: int, seed: int, cap: int = ENUMERATION_CAP) -> list[Clause]:
    clauses = audit_field(code.ctx, max(trials, 100), seed) + audit_code(code, trials, seed, cap)
    if code.is_default:
        clauses += verify_cyclic_structure(code, trials, seed).clauses
    return clauses
