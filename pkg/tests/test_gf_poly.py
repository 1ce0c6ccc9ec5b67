import numpy as np
import pytest
from hypothesis import given, strategies as st
from sympy import GF as SymGF, Poly, symbols

from ppcode.errors import DivisionByZeroPolyError, FieldMismatchError
from ppcode.gf.field import field_create
from ppcode.gf.poly import BiPoly, UniPoly, affine_power_matrix, bivariate_divide_by_univariate

X = symbols("x")


def to_sympy(f: UniPoly):
    return Poly(list(reversed(f.coeffs.tolist())) or [0], X, domain=SymGF(f.field.p))


def from_sympy(P, field):
    coeffs = [int(c) % field.p for c in reversed(P.all_coeffs())]
    return UniPoly(field, coeffs)


coeff_lists = st.lists(st.integers(0, 6), max_size=9)


@given(a=coeff_lists, b=coeff_lists)
def test_unipoly_ring_ops_match_sympy(a, b):
    F = field_create(7)
    fa, fb = UniPoly(F, a), UniPoly(F, b)
    assert from_sympy(to_sympy(fa) * to_sympy(fb), F) == fa * fb
    assert from_sympy(to_sympy(fa) + to_sympy(fb), F) == fa + fb
    if not fb.is_zero():
        q, r = fa.divmod(fb)
        sq, sr = to_sympy(fa).div(to_sympy(fb))
        assert q == from_sympy(sq, F) and r == from_sympy(sr, F)
        assert q * fb + r == fa
        assert from_sympy(to_sympy(fa).gcd(to_sympy(fb)), F) == fa.gcd(fb)


def test_trimming_and_degree(gf5):
    assert UniPoly(gf5, [1, 2, 0, 0]).degree == 1
    assert UniPoly(gf5, []).degree == -1
    assert UniPoly(gf5, [0, 0]).is_zero()


def test_division_by_zero(gf5):
    with pytest.raises(DivisionByZeroPolyError):
        UniPoly(gf5, [1]).divmod(UniPoly(gf5, []))
    with pytest.raises(DivisionByZeroPolyError):
        bivariate_divide_by_univariate(BiPoly(gf5, [[1]]), UniPoly(gf5, []))


def test_field_mismatch(gf5, gf9):
    with pytest.raises(FieldMismatchError):
        UniPoly(gf5, [1]) + UniPoly(gf9, [1])


def test_pow_mod_and_eval_gf9(gf9):
    f = UniPoly(gf9, [4, 0, 1])  # x^2 + (x+1) in GF(9) terms
    m = UniPoly(gf9, [1, 1, 0, 1])
    assert f.pow_mod(5, m) == (f**5) % m
    for z in range(9):
        direct = gf9.add(gf9.mul(z, z), 4)
        assert f(z) == direct


def test_roots_and_from_roots(gf9):
    f = UniPoly.from_roots(gf9, [1, 4, 4])
    assert f.roots() == [1, 4]
    assert f.degree == 3


def test_compose_and_reverse(gf5):
    f = UniPoly(gf5, [1, 2, 3])
    g = UniPoly(gf5, [4, 1])
    comp = f.compose(g)
    for z in range(5):
        assert comp(z) == f(g(z))
    assert UniPoly(gf5, [1, 2, 0, 3]).reversed() == UniPoly(gf5, [3, 0, 2, 1])


# -- bivariate ---------------------------------------------------------------


def test_divide_example_gf5(gf5):
    # f = x*y^2 + 3y + 1, g = y^2 + 1
    f = BiPoly(gf5, [[1, 3, 0], [0, 0, 1]])
    quot, rem = bivariate_divide_by_univariate(f, UniPoly(gf5, [1, 0, 1]))
    assert quot == BiPoly(gf5, [[0], [1]])
    assert rem == BiPoly(gf5, [[1, 3], [4, 0]])  # 3y + 1 - x


def test_divide_exact_and_small(gf5):
    f = BiPoly.monomial(gf5, 1, 2)
    quot, rem = f.divmod_y(UniPoly(gf5, [0, 1]))
    assert quot == BiPoly.monomial(gf5, 1, 1) and rem.is_zero()
    f = BiPoly(gf5, [[1, 1]])
    quot, rem = f.divmod_y(UniPoly(gf5, [0, 0, 1]))
    assert quot.is_zero() and rem == f


@pytest.mark.parametrize("p,r", [(5, 1), (3, 2), (2, 3)])
@given(seed=st.integers(0, 2**32 - 1), sx=st.integers(1, 5), ty=st.integers(1, 7),
       dg=st.integers(0, 5))
def test_divide_reconstructs(p, r, seed, sx, ty, dg):
    F = field_create(p, r)
    rng = np.random.default_rng(seed)
    f = BiPoly(F, F.random(rng, (sx, ty)))
    gc = F.random(rng, dg + 1)
    gc[-1] = F.random(rng, nonzero=True)
    g = UniPoly(F, gc)
    quot, rem = f.divmod_y(g)
    assert quot * g + rem == f
    assert rem.degy < g.degree or rem.is_zero()
    assert quot.degx <= f.degx and rem.degx <= f.degx


@given(seed=st.integers(0, 2**32 - 1))
def test_bipoly_mul_and_eval_agree(seed):
    F = field_create(3, 2)
    rng = np.random.default_rng(seed)
    a = BiPoly(F, F.random(rng, (3, 2)))
    b = BiPoly(F, F.random(rng, (2, 4)))
    xs, ys = np.meshgrid(np.arange(9), np.arange(9))
    assert np.array_equal((a * b)(xs, ys), F.mul(a(xs, ys), b(xs, ys)))
    assert np.array_equal((a + b)(xs, ys), F.add(a(xs, ys), b(xs, ys)))


@given(seed=st.integers(0, 2**32 - 1))
def test_substitute_affine(seed):
    F = field_create(7)
    rng = np.random.default_rng(seed)
    f = BiPoly(F, F.random(rng, (3, 4)))
    ax, ay = F.random(rng, 2, nonzero=True)
    bx, by = F.random(rng, 2)
    g = f.substitute_affine(ax, bx, ay, by)
    assert g.shape == f.shape
    xs, ys = np.meshgrid(np.arange(7), np.arange(7))
    assert np.array_equal(g(xs, ys), f(F.add(F.mul(ax, xs), bx), F.add(F.mul(ay, ys), by)))


def test_affine_power_matrix(gf5):
    u = affine_power_matrix(gf5, 2, 1, 3)
    # (2x+1)^2 = 4x^2 + 4x + 1
    assert u.tolist() == [[1, 0, 0], [1, 2, 0], [1, 4, 4]]


def test_padding_and_trim(gf5):
    f = BiPoly(gf5, [[1, 0, 0], [0, 0, 0]])
    assert f.trimmed().shape == (1, 1)
    assert f.padded(2, 5).shape == (2, 5)
    with pytest.raises(ValueError):
        BiPoly(gf5, [[0, 1]]).padded(1, 1)
    assert BiPoly(gf5, [[1]]) == f
