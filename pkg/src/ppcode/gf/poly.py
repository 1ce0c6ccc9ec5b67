"""Univariate and bivariate polynomials over a :class:`FieldCtx`."""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from ..errors import DivisionByZeroPolyError
from .field import FieldCtx


def _trimmed(c: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(c)
    return c[: nz[-1] + 1] if nz.size else c[:0]


class UniPoly:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies ``x**i``.

    Coefficients are serialized field elements with trailing zeros removed,
    so the zero polynomial has an empty coefficient array.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldCtx, coeffs: Iterable[int] = ()):
        self.field = field
        self.coeffs = _trimmed(np.array(list(coeffs) if not isinstance(coeffs, np.ndarray)
                                        else coeffs, dtype=np.int64).reshape(-1))

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldCtx) -> "UniPoly":
        return cls(field)

    @classmethod
    def one(cls, field: FieldCtx) -> "UniPoly":
        return cls(field, [1])

    @classmethod
    def x(cls, field: FieldCtx) -> "UniPoly":
        return cls(field, [0, 1])

    @classmethod
    def monomial(cls, field: FieldCtx, degree: int, coeff: int = 1) -> "UniPoly":
        c = np.zeros(degree + 1, dtype=np.int64)
        c[degree] = coeff
        return cls(field, c)

    @classmethod
    def from_roots(cls, field: FieldCtx, roots: Iterable[int]) -> "UniPoly":
        out = cls.one(field)
        for r in roots:
            out = out * cls(field, [field.neg(int(r)), 1])
        return out

    # -- basic properties ------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    @property
    def leading(self) -> int:
        return int(self.coeffs[-1]) if len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return int(self.coeffs[i]) if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.field, tuple(self.coeffs.tolist())))

    def __repr__(self) -> str:
        return f"UniPoly({self.field!r}, {self.coeffs.tolist()})"

    def _padded(self, n: int) -> np.ndarray:
        out = np.zeros(n, dtype=np.int64)
        out[: len(self.coeffs)] = self.coeffs
        return out

    def _check(self, other: "UniPoly") -> None:
        self.field.check_same(other.field)

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        n = max(len(self), len(other))
        return UniPoly(self.field, self.field.add(self._padded(n), other._padded(n)))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        n = max(len(self), len(other))
        return UniPoly(self.field, self.field.sub(self._padded(n), other._padded(n)))

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.field, self.field.neg(self.coeffs))

    def scale(self, c: int) -> "UniPoly":
        return UniPoly(self.field, self.field.mul(self.coeffs, int(c)))

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, np.integer)):
            return self.scale(other)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return UniPoly(self.field)
        f = self.field
        a, b = (self.coeffs, other.coeffs) if len(self) <= len(other) else (other.coeffs, self.coeffs)
        out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
        for i, ai in enumerate(a.tolist()):
            if ai:
                seg = out[i: i + len(b)]
                out[i: i + len(b)] = f.add(seg, f.mul(b, ai))
        return UniPoly(f, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UniPoly":
        result, base = UniPoly.one(self.field), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        self._check(other)
        if other.is_zero():
            raise DivisionByZeroPolyError("division by the zero polynomial")
        f = self.field
        rem = self.coeffs.copy()
        dg = other.degree
        if self.degree < dg:
            return UniPoly(f), UniPoly(f, rem)
        inv = f.inv(other.leading)
        g = other.coeffs
        quot = np.zeros(self.degree - dg + 1, dtype=np.int64)
        for k in range(self.degree, dg - 1, -1):
            c = f.mul(int(rem[k]), inv)
            if c:
                quot[k - dg] = c
                rem[k - dg: k + 1] = f.sub(rem[k - dg: k + 1], f.mul(g, c))
        return UniPoly(f, quot), UniPoly(f, rem[:dg])

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.leading))

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic greatest common divisor (zero only if both inputs are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def pow_mod(self, e: int, modulus: "UniPoly") -> "UniPoly":
        result = UniPoly.one(self.field) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def compose(self, inner: "UniPoly") -> "UniPoly":
        out = UniPoly(self.field)
        for c in self.coeffs[::-1].tolist():
            out = out * inner + UniPoly(self.field, [c])
        return out

    def reversed(self) -> "UniPoly":
        """``x**deg * self(1/x)``."""
        return UniPoly(self.field, self.coeffs[::-1])

    def __call__(self, x):
        """Horner evaluation at a serialized element or an array of them."""
        f = self.field
        acc = np.zeros_like(np.asarray(x, dtype=np.int64))
        for c in self.coeffs[::-1].tolist():
            acc = f.add(f.mul(acc, x), c)
        return f._out(acc, x)

    def roots(self) -> list[int]:
        """All roots in the field, by exhaustive evaluation."""
        vals = self(np.arange(self.field.q))
        return np.flatnonzero(vals == 0).tolist()


class BiPoly:
    """Bivariate polynomial on a dense coefficient grid.

    ``coeffs[a, b]`` multiplies ``x**a * y**b``. The grid shape is the tracked
    degree bound: ``shape == (sx, ty)`` means ``deg_x < sx`` and ``deg_y < ty``.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldCtx, coeffs):
        coeffs = np.array(coeffs, dtype=np.int64, copy=True)
        if coeffs.ndim != 2:
            raise ValueError("BiPoly coefficients must be a 2-D grid")
        self.field = field
        self.coeffs = coeffs

    @classmethod
    def zeros(cls, field: FieldCtx, sx: int, ty: int) -> "BiPoly":
        return cls(field, np.zeros((sx, ty), dtype=np.int64))

    @classmethod
    def monomial(cls, field: FieldCtx, a: int, b: int, coeff: int = 1,
                 shape: tuple[int, int] | None = None) -> "BiPoly":
        sx, ty = shape or (a + 1, b + 1)
        out = cls.zeros(field, sx, ty)
        out.coeffs[a, b] = coeff
        return out

    @classmethod
    def from_yspoly(cls, g: UniPoly, sx: int = 1) -> "BiPoly":
        c = np.zeros((sx, max(len(g), 1)), dtype=np.int64)
        c[0, : len(g)] = g.coeffs
        return cls(g.field, c)

    # -- shape and comparison ------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.coeffs.shape

    @property
    def degx(self) -> int:
        """Actual x-degree (-1 for zero)."""
        nz = np.flatnonzero(self.coeffs.any(axis=1))
        return int(nz[-1]) if nz.size else -1

    @property
    def degy(self) -> int:
        nz = np.flatnonzero(self.coeffs.any(axis=0))
        return int(nz[-1]) if nz.size else -1

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def trimmed(self) -> "BiPoly":
        return BiPoly(self.field, self.coeffs[: self.degx + 1, : self.degy + 1])

    def padded(self, sx: int, ty: int) -> "BiPoly":
        if self.degx >= sx or self.degy >= ty:
            raise ValueError(f"cannot fit degrees ({self.degx}, {self.degy}) into {sx}x{ty}")
        out = np.zeros((sx, ty), dtype=np.int64)
        t = self.trimmed().coeffs
        out[: t.shape[0], : t.shape[1]] = t
        return BiPoly(self.field, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        a, b = self.trimmed().coeffs, other.trimmed().coeffs
        return self.field == other.field and a.shape == b.shape and np.array_equal(a, b)

    def __hash__(self) -> int:
        return hash((self.field, self.trimmed().coeffs.tobytes()))

    def __repr__(self) -> str:
        return f"BiPoly({self.field!r}, {self.coeffs.tolist()})"

    def key(self) -> tuple[int, ...]:
        """Flattened coefficient tuple, the sort key for deterministic listings."""
        return tuple(self.coeffs.reshape(-1).tolist())

    # -- arithmetic --------------------------------------------------------------

    def _aligned(self, other: "BiPoly") -> tuple[np.ndarray, np.ndarray]:
        self.field.check_same(other.field)
        sx = max(self.shape[0], other.shape[0])
        ty = max(self.shape[1], other.shape[1])
        a = np.zeros((sx, ty), dtype=np.int64)
        b = np.zeros((sx, ty), dtype=np.int64)
        a[: self.shape[0], : self.shape[1]] = self.coeffs
        b[: other.shape[0], : other.shape[1]] = other.coeffs
        return a, b

    def __add__(self, other: "BiPoly") -> "BiPoly":
        a, b = self._aligned(other)
        return BiPoly(self.field, self.field.add(a, b))

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        a, b = self._aligned(other)
        return BiPoly(self.field, self.field.sub(a, b))

    def __neg__(self) -> "BiPoly":
        return BiPoly(self.field, self.field.neg(self.coeffs))

    def scale(self, c: int) -> "BiPoly":
        return BiPoly(self.field, self.field.mul(self.coeffs, int(c)))

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (int, np.integer)):
            return self.scale(other)
        if isinstance(other, UniPoly):
            other = BiPoly.from_yspoly(other)
        self.field.check_same(other.field)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if np.count_nonzero(a) > np.count_nonzero(b):
            a, b = b, a
        out = np.zeros((a.shape[0] + b.shape[0] - 1, a.shape[1] + b.shape[1] - 1), dtype=np.int64)
        for i, j in zip(*np.nonzero(a)):
            blk = out[i: i + b.shape[0], j: j + b.shape[1]]
            out[i: i + b.shape[0], j: j + b.shape[1]] = f.add(blk, f.mul(b, int(a[i, j])))
        return BiPoly(f, out)

    __rmul__ = __mul__

    def __call__(self, x, y):
        """Evaluate at serialized points; ``x`` and ``y`` broadcast together."""
        f = self.field
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        shape = np.broadcast(x, y).shape
        acc = np.zeros(shape, dtype=np.int64)
        for a in range(self.shape[0] - 1, -1, -1):
            inner = np.zeros(shape, dtype=np.int64)
            for c in self.coeffs[a, ::-1].tolist():
                inner = f.add(f.mul(inner, y), c)
            acc = f.add(f.mul(acc, x), inner)
        return int(acc) if acc.ndim == 0 else acc

    def substitute_affine(self, ax: int, bx: int, ay: int, by: int) -> "BiPoly":
        """``self(ax*x + bx, ay*y + by)`` on the same grid shape."""
        f = self.field
        ux = _affine_power_matrix(f, ax, bx, self.shape[0])
        uy = _affine_power_matrix(f, ay, by, self.shape[1])
        # out[X, Y] = sum_{a,b} c[a, b] * ux[a, X] * uy[b, Y]
        return BiPoly(f, f.matmul(f.matmul(ux.T, self.coeffs), uy))

    def divmod_y(self, g: UniPoly) -> tuple["BiPoly", "BiPoly"]:
        """Long division by a univariate polynomial in ``y``.

        Returns ``(quot, rem)`` with ``self == quot * g + rem`` and
        ``deg_y(rem) < deg(g)``; x-degrees never grow.
        """
        self.field.check_same(g.field)
        if g.is_zero():
            raise DivisionByZeroPolyError("division by the zero polynomial")
        f = self.field
        sx, ty = self.shape
        dg = g.degree
        rem = self.coeffs.copy()
        qt = max(ty - dg, 1)
        quot = np.zeros((sx, qt), dtype=np.int64)
        inv = f.inv(g.leading)
        for k in range(ty - 1, dg - 1, -1):
            c = f.mul(rem[:, k], inv)
            if c.any():
                quot[:, k - dg] = c
                rem[:, k - dg: k + 1] = f.sub(rem[:, k - dg: k + 1], f.mul(c[:, None], g.coeffs[None, :]))
        rem = rem[:, : max(dg, 1)] if dg < ty else rem
        return BiPoly(f, quot), BiPoly(f, rem)


def _affine_power_matrix(field: FieldCtx, a: int, b: int, n: int) -> np.ndarray:
    """Row ``k`` holds the coefficients of ``(a*x + b)**k``, for ``k < n``."""
    u = np.zeros((n, n), dtype=np.int64)
    if n == 0:
        return u
    u[0, 0] = 1
    for k in range(1, n):
        shifted = np.zeros(n, dtype=np.int64)
        shifted[1:] = u[k - 1, :-1]
        u[k] = field.add(field.mul(shifted, a), field.mul(u[k - 1], b))
    return u


def affine_power_matrix(field: FieldCtx, a: int, b: int, n: int) -> np.ndarray:
    return _affine_power_matrix(field, int(a), int(b), n)


def bivariate_divide_by_univariate(f: BiPoly, g: UniPoly) -> tuple[BiPoly, BiPoly]:
    return f.divmod_y(g)


def poly_from_ints(field: FieldCtx, coeffs: Sequence[int]) -> UniPoly:
    return UniPoly(field, coeffs)
