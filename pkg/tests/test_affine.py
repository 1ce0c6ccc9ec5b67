import pytest
from hypothesis import given, strategies as st
from math import gcd

from ppcode.affine import AffineMap, compose, is_fixed_point, orbit, order, power
from ppcode.errors import FieldMismatchError, ZeroElementError
from ppcode.gf.field import field_create


def test_compose_example(gf5):
    # (2x + 1) o (3x + 4) = 6x + 9 = x + 4
    assert compose(AffineMap(gf5, 2, 1), AffineMap(gf5, 3, 4)) == AffineMap(gf5, 1, 4)


def test_identity_and_inverse(gf5):
    l = AffineMap(gf5, 3, 2)
    ident = AffineMap.identity(gf5)
    assert l @ ident == l and ident @ l == l
    assert l @ l.inverse() == ident
    assert l.inverse() == AffineMap(gf5, 2, gf5.neg(gf5.mul(2, 2)))


def test_power_examples(gf5):
    assert power(AffineMap(gf5, 1, 1), 3) == AffineMap(gf5, 1, 3)
    assert power(AffineMap(gf5, 2, 1), 2) == AffineMap(gf5, 4, 3)
    assert power(AffineMap(gf5, 3, 4), 0).is_identity()


def test_order_examples(gf5):
    assert order(AffineMap(gf5, 1, 1)) == 5
    assert order(AffineMap(gf5, 2, 3)) == 4
    assert order(AffineMap.identity(gf5)) == 1


def test_orbit_examples(gf5):
    assert orbit(AffineMap(gf5, 2, 0), 1, 4) == [1, 2, 4, 3]
    assert orbit(AffineMap.identity(gf5), 3, 3) == [3, 3, 3]
    assert orbit(AffineMap(gf5, 1, 1), 0, 5) == [0, 1, 2, 3, 4]


def test_fixed_points(gf5):
    assert is_fixed_point(AffineMap(gf5, 2, 0), 0)
    assert not is_fixed_point(AffineMap(gf5, 2, 0), 1)
    assert not any(is_fixed_point(AffineMap(gf5, 1, 1), z) for z in range(5))


def test_zero_slope_rejected(gf5):
    with pytest.raises(ZeroElementError):
        AffineMap(gf5, 0, 1)


def test_field_mismatch(gf5, gf9):
    with pytest.raises(FieldMismatchError):
        AffineMap(gf5, 1, 1) @ AffineMap(gf9, 1, 1)


def test_parse_and_format(gf9):
    l = AffineMap.parse(gf9, "4*x+2")
    assert l == AffineMap(gf9, 4, 2)
    assert AffineMap.parse(gf9, str(l)) == l
    assert AffineMap.parse(gf9, "x") == AffineMap.identity(gf9)
    assert AffineMap.parse(gf9, "x + 1") == AffineMap(gf9, 1, 1)
    with pytest.raises(ValueError):
        AffineMap.parse(gf9, "x^2")


FIELDS = [(5, 1), (7, 1), (3, 2), (2, 3)]


@pytest.mark.parametrize("p,r", FIELDS)
@given(data=st.data())
def test_power_is_repeated_composition(p, r, data):
    F = field_create(p, r)
    l = AffineMap(F, data.draw(st.integers(1, F.q - 1)), data.draw(st.integers(0, F.q - 1)))
    cur = AffineMap.identity(F)
    for i in range(3 * l.order() + 1):
        assert l.power(i) == cur
        cur = l @ cur
    assert l.power(-1) == l.inverse()


@pytest.mark.parametrize("p,r", FIELDS)
def test_order_is_least_period(p, r):
    F = field_create(p, r)
    for a in range(1, F.q):
        for b in range(F.q):
            l = AffineMap(F, a, b)
            k = l.order()
            assert l.power(k).is_identity()
            assert not any(l.power(i).is_identity() for i in range(1, k))


@pytest.mark.parametrize("p,r", FIELDS)
def test_orbits_of_non_fixed_points_are_distinct(p, r):
    F = field_create(p, r)
    for a in range(1, F.q):
        for b in range(F.q):
            l = AffineMap(F, a, b)
            for z in range(F.q):
                orb = l.orbit(z, l.order())
                assert orb == l.orbit_array(z, l.order()).tolist()
                if not l.is_fixed_point(z):
                    assert len(set(orb)) == l.order()


@pytest.mark.parametrize("p,r", FIELDS)
def test_coprime_power_keeps_order_and_fixed_points(p, r):
    F = field_create(p, r)
    for a in range(1, F.q):
        for b in range(F.q):
            l = AffineMap(F, a, b)
            n = l.order()
            for m in range(1, 2 * n + 2):
                if gcd(m, n) != 1:
                    continue
                lm = l.power(m)
                assert lm.order() == n
                # a fixed point of l^m is a fixed point of l
                assert lm.fixed_points() == l.fixed_points()
