import pytest
from sympy import GF as SymGF, Poly, symbols

from ppcode.affine import AffineMap
from ppcode.gf.field import field_create
from ppcode.gf.poly import UniPoly
from ppcode.gf.splitting import (
    distinct_degree_profile,
    linear_roots,
    splitting_degree_profile,
    splitting_polynomial,
)

X = symbols("x")


def test_profiles_gf5(gf5):
    assert splitting_degree_profile(gf5, AffineMap(gf5, 1, 0)) == {1: 5}
    assert splitting_degree_profile(gf5, AffineMap(gf5, 2, 0)) == {1: 1, 4: 1}
    assert splitting_degree_profile(gf5, AffineMap(gf5, 1, 1)) == {5: 1}


def _sympy_profile(p, a, b):
    P = Poly(X**p - a * X - b, X, domain=SymGF(p))
    prof = {}
    for fac, mult in P.factor_list()[1]:
        prof[fac.degree()] = prof.get(fac.degree(), 0) + mult
    return dict(sorted(prof.items()))


@pytest.mark.parametrize("p", [5, 7])
def test_profile_matches_sympy_factorization(p):
    F = field_create(p)
    for a in range(1, p):
        for b in range(p):
            assert splitting_degree_profile(F, AffineMap(F, a, b)) == _sympy_profile(p, a, b)


@pytest.mark.parametrize("p,r", [(5, 1), (7, 1), (3, 2)])
def test_degrees_are_one_or_order(p, r):
    F = field_create(p, r)
    for a in range(1, F.q):
        for b in range(F.q):
            l = AffineMap(F, a, b)
            prof = splitting_degree_profile(F, l)
            assert set(prof) <= {1, l.order()}
            assert prof.get(1, 0) == len(l.fixed_points())
            assert linear_roots(F, l) == l.fixed_points()


def test_splitting_polynomial_shape(gf9):
    h = splitting_polynomial(gf9, AffineMap(gf9, 4, 2))
    assert h.degree == 9
    assert h[1] == gf9.neg(4) and h[0] == gf9.neg(2)


def test_distinct_degree_on_known_product(gf5):
    # (x - 1)(x^2 + 2), and x^2 + 2 is irreducible mod 5
    f = UniPoly(gf5, [4, 1]) * UniPoly(gf5, [2, 0, 1])
    assert distinct_degree_profile(f) == {1: 1, 2: 1}
