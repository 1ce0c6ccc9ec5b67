import numpy as np
import pytest

from ppcode.affine import AffineMap
from ppcode.code import encode, enumerate_span, ppc_code, ppc_default
from ppcode.cyclic import (
    check_poly,
    cyclic_shifts,
    dual_generator_poly,
    fold,
    generator_poly,
    hasse_parity_matrix,
    root_multiplicity,
    shift_polynomial,
    unfold,
    verify_cyclic_structure,
    xn_minus_one,
)
from ppcode.errors import MultiplicityExceedsCharacteristicError, NonDefaultInstantiationError
from ppcode.gf import linalg
from ppcode.gf.field import field_create
from ppcode.gf.poly import BiPoly, UniPoly


@pytest.fixture(scope="module")
def c5():
    return ppc_default(field_create(5), 2, 2)


def test_unfold_examples(c5):
    assert np.array_equal(unfold(np.ones((5, 4), np.int64)), np.ones(20))
    nu = np.arange(20)
    assert np.array_equal(unfold(encode(c5, BiPoly(c5.ctx, [[0], [1]]))), nu % 5)
    assert np.array_equal(unfold(encode(c5, BiPoly(c5.ctx, [[0, 1]]))),
                          [pow(2, int(k), 5) for k in nu])


def test_fold_inverts_unfold(rng):
    c = rng.integers(0, 9, (3, 8))
    assert np.array_equal(fold(unfold(c), 3), c)


def test_shift_examples(c5):
    F = c5.ctx
    assert shift_polynomial(c5, BiPoly(F, [[1]])) == BiPoly(F, [[1]])
    assert shift_polynomial(c5, BiPoly(F, [[0, 1]])) == BiPoly(F, [[0, 2]])
    assert shift_polynomial(c5, BiPoly(F, [[0], [1]])) == BiPoly(F, [[1], [1]])


def test_shift_keeps_degrees(c5, rng):
    for _ in range(20):
        g = shift_polynomial(c5, c5.random_message(rng))
        assert g.degx < c5.s and g.degy < c5.t


def test_generator_gf3():
    code = ppc_default(field_create(3), 1, 1)
    g = generator_poly(code)
    assert g.coeffs.tolist() == [1] * 6
    assert g * UniPoly(code.ctx, [2, 1]) == xn_minus_one(code.ctx, 6)


def test_generator_gf9_degree():
    code = ppc_default(field_create(3, 2), 2, 3)
    assert generator_poly(code).degree == 18


@pytest.mark.parametrize("pr", [(3, 1), (5, 1), (7, 1), (3, 2), (2, 2)])
def test_generator_exact_for_all_degrees(pr):
    F = field_create(*pr)
    assert xn_minus_one(F, F.p * (F.q - 1)) == xn_minus_one(F, F.q - 1) ** F.p
    for s in range(1, F.p + 1):
        for t in range(1, F.q):
            code = ppc_default(F, s, t)
            g, h = generator_poly(code), check_poly(code)
            assert g.degree == code.N - s * t
            assert g * h == xn_minus_one(F, code.N)
            assert h.reversed().monic() == dual_generator_poly(code)


def test_generator_rejects_custom_code():
    F7 = field_create(7)
    code = ppc_code(F7, AffineMap(F7, 1, 1), AffineMap(F7, 3, 1), 2, 1, 2, 2)
    with pytest.raises(NonDefaultInstantiationError):
        generator_poly(code)
    with pytest.raises(NonDefaultInstantiationError):
        verify_cyclic_structure(code, 2)


@pytest.mark.parametrize("pr,s,t", [((3, 1), 1, 1), ((5, 1), 2, 2), ((3, 2), 2, 3)])
def test_shift_span_is_the_code(pr, s, t):
    code = ppc_default(field_create(*pr), s, t)
    F = code.ctx
    rows = cyclic_shifts(generator_poly(code), code.N)
    assert linalg.rank(F, rows) == s * t
    gen = np.array([unfold(fold(row, code.m)) for row in code.generator])
    assert linalg.rank(F, np.vstack([rows, gen])) == s * t
    if F.q ** (s * t) <= 10**4:
        for _, vecs in enumerate_span(F, code.generator):
            for v in vecs:
                assert linalg.in_span(F, rows, v)


@pytest.mark.parametrize("pr,s,t", [((3, 1), 1, 1), ((3, 2), 2, 3), ((5, 1), 3, 2)])
def test_verify_passes(pr, s, t):
    code = ppc_default(field_create(*pr), s, t)
    report = verify_cyclic_structure(code, trials=30, seed=4)
    assert report.ok, report.lines()


def test_negative_control_drops_a_factor():
    code = ppc_default(field_create(3, 2), 2, 3)
    F = code.ctx
    root = F.pow(F.primitive, F.q - code.t)
    bad = generator_poly(code) * UniPoly(F, [F.neg(root), 1])
    report = verify_cyclic_structure(code, trials=20, g=bad)
    assert not report.ok
    assert not report["generator_divides"].passed
    assert "seed=0" in report["generator_divides"].detail
    assert report["cyclic_shift"].passed


def test_report_lines_format():
    code = ppc_default(field_create(3), 1, 1)
    lines = verify_cyclic_structure(code, trials=3).lines()
    assert lines[0] == "power_identity: PASS"
    assert all(": PASS" in line for line in lines)


# -- Hasse parity matrix ---------------------------------------------------------------


def test_hasse_example():
    F = field_create(5)
    H = hasse_parity_matrix(F, 1, 2, 3)
    assert F.matmul(H, np.array([[1], [3], [1]])).reshape(-1).tolist() == [0, 0]


def test_hasse_simple_root_and_zero():
    F = field_create(5)
    H = hasse_parity_matrix(F, 3, 2, 2)
    assert F.matmul(H, np.array([[2], [1]])).any()
    for r in range(1, 6):
        assert not F.matmul(hasse_parity_matrix(F, 3, r, 7), np.zeros((7, 1), np.int64)).any()


def test_hasse_rejects_large_r():
    with pytest.raises(MultiplicityExceedsCharacteristicError):
        hasse_parity_matrix(field_create(5), 1, 6, 10)
    with pytest.raises(MultiplicityExceedsCharacteristicError):
        hasse_parity_matrix(field_create(5), 1, 0, 10)


def test_root_multiplicity_examples():
    F = field_create(7)
    assert root_multiplicity(UniPoly.from_roots(F, [2, 2, 2, 5]), 2) == 3
    assert root_multiplicity(UniPoly.from_roots(F, [5]), 2) == 0
    assert root_multiplicity(UniPoly.zero(F), 2) == -1


def random_hasse_instance(F, rng):
    beta = int(rng.integers(1, F.q))
    r = int(rng.integers(1, F.p + 1))
    k = int(rng.integers(0, F.p + 2))
    u = UniPoly(F, F.random(rng, int(rng.integers(1, 12))))
    c = UniPoly(F, [F.neg(beta), 1]) ** k * u
    return c, beta, r


@pytest.mark.parametrize("pr", [(5, 1), (3, 2), (7, 1)])
def test_hasse_equivalence(pr, rng):
    F = field_create(*pr)
    hits = 0
    for _ in range(500):
        c, beta, r = random_hasse_instance(F, rng)
        N = max(c.degree + 1, 1)
        vec = np.zeros((N, 1), np.int64)
        vec[: c.degree + 1, 0] = c.coeffs[: c.degree + 1]
        kernel = not F.matmul(hasse_parity_matrix(F, beta, r, N), vec).any()
        mult = root_multiplicity(c, beta)
        divides = c.is_zero() or mult >= r
        assert kernel == divides
        hits += divides
    assert 0 < hits < 500
