"""Acceptance suite: each test checks one criterion and records a verdict line.

Run just this file with ``pytest tests/test_acceptance.py -v``; the verdicts
are printed in an "acceptance criteria" section at the end of the run.
"""

import time

import numpy as np
import pytest

from ppcode.affine import AffineMap
from ppcode.code import (
    column_agreement,
    encode,
    encode_many,
    encode_via_tensor,
    min_distance_exhaustive,
    ppc_default,
    rows_in_rs,
)
from ppcode.cyclic import hasse_parity_matrix, root_multiplicity, verify_cyclic_structure
from ppcode.decode import constraint_residuals, in_span, is_coprime, list_decode
from ppcode.gf.field import field_create
from ppcode.gf.poly import UniPoly
from ppcode.gf.splitting import linear_roots, splitting_degree_profile
from ppcode.harness.channel import corrupt_columns
from ppcode.harness.oracle import brute_force_list
from ppcode.rng import trial_rng

SEED = 20240917


def small_codes():
    return [ppc_default(field_create(5), 2, 2),
            ppc_default(field_create(3, 2), 2, 3),
            ppc_default(field_create(11), 2, 3)]


@pytest.fixture(scope="module")
def construction_words():
    out, elapsed = [], 0.0
    for k, code in enumerate(small_codes()):
        msgs = code.ctx.random(trial_rng(SEED, k), (1000, code.s, code.t))
        t0 = time.perf_counter()
        words = encode_many(code, msgs)
        tensor = np.array([encode_via_tensor(code, f) for f in msgs])
        elapsed += time.perf_counter() - t0
        out.append((code, words, tensor))
    return out, elapsed


def test_criterion_01_construction_equivalence(construction_words, report_criterion):
    data, elapsed = construction_words
    t0 = time.perf_counter()
    bad = sum(int(np.any(np.any(w != t, axis=(1, 2)))) for _, w, t in data)
    elapsed += time.perf_counter() - t0
    ok = bad == 0 and elapsed < 10
    assert report_criterion(1, ok, f"3 x 1000 messages, {bad} mismatching codes, {elapsed:.2f}s")


def test_criterion_02_rows_in_rs(construction_words, report_criterion):
    data, elapsed = construction_words
    t0 = time.perf_counter()
    rows = sum(int(rows_in_rs(code, w).sum()) for code, w, _ in data)
    total = sum(w.shape[0] * w.shape[1] for _, w, _ in data)
    elapsed += time.perf_counter() - t0
    ok = rows == total and elapsed < 10
    assert report_criterion(2, ok, f"{rows}/{total} rows in RS, {elapsed:.2f}s")


def test_criterion_03_distance(report_criterion):
    t0 = time.perf_counter()
    parts, ok = [], True
    for code in small_codes()[:2]:
        col, sym = min_distance_exhaustive(code)
        expect = (code.m - code.s + 1) * (code.n - code.t + 1)
        ok &= sym == expect == 12 and col >= code.n - code.t + 1
        parts.append(f"GF({code.ctx.q}) unfolded {sym} column {col}")
    elapsed = time.perf_counter() - t0
    ok &= elapsed < 60
    assert report_criterion(3, ok, f"{'; '.join(parts)}, {elapsed:.1f}s")


# -- decoding (criteria 4 to 7 share these runs) ------------------------------------------


def decode_trials(code, w, threshold, errors, trials, seed):
    runs = []
    for k in range(trials):
        rng = trial_rng(seed, k)
        f = code.random_message(rng)
        c = encode(code, f)
        r = corrupt_columns(c, errors, rng, q=code.ctx.q)
        out = list_decode(code, r, w, threshold)
        runs.append((f, c, r, out))
    return runs


@pytest.fixture(scope="module")
def gf11_runs():
    code = ppc_default(field_create(11), 2, 3)
    t0 = time.perf_counter()
    runs = decode_trials(code, 4, 8, 2, 200, SEED)
    return code, runs, time.perf_counter() - t0


@pytest.fixture(scope="module")
def gf71_runs():
    code = ppc_default(field_create(71), 37, 35)
    t0 = time.perf_counter()
    runs = decode_trials(code, 17, 52, 18, 25, SEED + 1)
    return code, runs, time.perf_counter() - t0


def test_criterion_04_completeness(gf11_runs, report_criterion):
    code, runs, elapsed = gf11_runs
    agree = all(column_agreement(c, r) == 8 for _, c, r, _ in runs)
    found = sum(any(g == f for g in out.list) for f, _, _, out in runs)
    dims = max(out.dimension for *_, out in runs)
    ok = agree and found == 200 and dims <= 3 and elapsed < 60
    assert report_criterion(4, ok, f"planted found {found}/200, max dim {dims}, {elapsed:.1f}s")


def test_criterion_05_oracle_equality(gf11_runs, report_criterion):
    code, runs, _ = gf11_runs
    t0 = time.perf_counter()
    equal = 0
    for f, _, r, out in runs[:50]:
        brute = brute_force_list(code, r, 8)
        equal += {g.key() for g in brute} == {g.key() for g in out.list}
    elapsed = time.perf_counter() - t0
    ok = equal == 50 and elapsed < 15 * 60
    assert report_criterion(5, ok, f"{equal}/50 lists equal the 11^6 oracle, {elapsed:.1f}s")


def test_criterion_06_beyond_unique(gf71_runs, report_criterion):
    code, runs, elapsed = gf71_runs
    assert 18 > (code.n - code.t) // 2
    agree = all(column_agreement(c, r) == 52 for _, c, r, _ in runs)
    found = sum(in_span(code, out.basis, f) for f, _, _, out in runs)
    dims = max(out.dimension for *_, out in runs)
    ok = agree and found == 25 and dims <= 16 and elapsed < 600
    assert report_criterion(6, ok, f"planted in subspace {found}/25, max dim {dims}, {elapsed:.1f}s")


def test_criterion_07_interpolation_soundness(gf11_runs, gf71_runs, report_criterion):
    checked = bad = 0
    for code, runs, _ in (gf11_runs, gf71_runs):
        for _, _, r, out in runs:
            checked += 1
            if constraint_residuals(code, r, out.interp).any() or not is_coprime(code, out.interp):
                bad += 1
    assert report_criterion(7, bad == 0, f"{checked - bad}/{checked} interpolants sound and coprime")


# -- structure ------------------------------------------------------------------------------


def test_criterion_08_cyclic_audit(report_criterion):
    t0 = time.perf_counter()
    reports = [verify_cyclic_structure(ppc_default(field_create(3), 1, 1), 100, SEED),
               verify_cyclic_structure(ppc_default(field_create(3, 2), 2, 3), 100, SEED)]
    elapsed = time.perf_counter() - t0
    failed = [c.line() for rep in reports for c in rep.clauses if not c.passed]
    ok = not failed and elapsed < 60
    detail = "all clauses pass on GF(3), GF(9)" if not failed else "; ".join(failed)
    assert report_criterion(8, ok, f"{detail}, {elapsed:.1f}s")


def test_criterion_09_hasse_parity(report_criterion):
    t0 = time.perf_counter()
    rng = np.random.default_rng(SEED)
    agree = total = divisible = 0
    for F in (field_create(5), field_create(3, 2)):
        for _ in range(500):
            beta = int(rng.integers(1, F.q))
            r = int(rng.integers(1, F.p + 1))
            # planting a random power of (x - beta) keeps both outcomes common
            u = UniPoly(F, F.random(rng, int(rng.integers(1, 10))))
            c = UniPoly(F, [F.neg(beta), 1]) ** int(rng.integers(0, F.p + 2)) * u
            N = max(c.degree + 1, 1)
            vec = np.zeros((N, 1), np.int64)
            vec[: c.degree + 1, 0] = c.coeffs[: c.degree + 1]
            kernel = not F.matmul(hasse_parity_matrix(F, beta, r, N), vec).any()
            divides = c.is_zero() or root_multiplicity(c, beta) >= r
            agree += kernel == divides
            divisible += divides
            total += 1
    elapsed = time.perf_counter() - t0
    ok = agree == total and elapsed < 30
    assert report_criterion(9, ok, f"{agree}/{total} agree ({divisible} divisible), {elapsed:.1f}s")


def test_criterion_10_splitting_profiles(report_criterion):
    t0 = time.perf_counter()
    total, bad = 0, []
    for F in (field_create(5), field_create(7)):
        for a in range(1, F.q):
            for b in range(F.q):
                l = AffineMap(F, a, b)
                prof = splitting_degree_profile(F, l)
                fixed = l.fixed_points()
                total += 1
                if (not set(prof) <= {1, l.order()} or prof.get(1, 0) != len(fixed)
                        or linear_roots(F, l) != fixed
                        or sum(d * k for d, k in prof.items()) != F.q):
                    bad.append(f"GF({F.q}) {l}")
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 30
    assert report_criterion(10, ok, f"{total - len(bad)}/{total} maps match, {elapsed:.1f}s")
