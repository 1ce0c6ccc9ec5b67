"""The affine group GA(q): maps x -> a*x + b with a != 0."""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import FieldMismatchError, ZeroElementError
from .gf.field import FieldCtx


@dataclass(frozen=True)
class AffineMap:
    """``x -> a*x + b`` over ``field``; ``a`` and ``b`` are serialized elements."""

    field: FieldCtx
    a: int
    b: int = 0

    def __post_init__(self):
        q = self.field.q
        a, b = int(self.a), int(self.b)
        if not (0 <= a < q and 0 <= b < q):
            raise ValueError(f"coefficients must be serialized elements in [0, {q})")
        if a == 0:
            raise ZeroElementError("an affine map needs a nonzero linear coefficient")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def identity(cls, field: FieldCtx) -> "AffineMap":
        return cls(field, 1, 0)

    @classmethod
    def parse(cls, field: FieldCtx, text: str) -> "AffineMap":
        """Parse ``"a*x+b"``; also accepts ``"x"``, ``"a*x"``, ``"x+b"``."""
        s = text.replace(" ", "")
        m = re.fullmatch(r"(?:(\d+)\*)?x(?:\+(\d+))?", s)
        if not m:
            raise ValueError(f"cannot parse affine map {text!r}")
        a = int(m.group(1)) if m.group(1) else 1
        b = int(m.group(2)) if m.group(2) else 0
        return cls(field, a, b)

    def __str__(self) -> str:
        return f"{self.a}*x+{self.b}"

    def __call__(self, z):
        f = self.field
        return f.add(f.mul(self.a, z), self.b)

    def _check(self, other: "AffineMap") -> None:
        if self.field != other.field:
            raise FieldMismatchError("affine maps over different fields")

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """``self(inner(x))``."""
        self._check(inner)
        f = self.field
        return AffineMap(f, f.mul(self.a, inner.a), f.add(f.mul(self.a, inner.b), self.b))

    def __matmul__(self, inner: "AffineMap") -> "AffineMap":
        return self.compose(inner)

    def inverse(self) -> "AffineMap":
        f = self.field
        ai = f.inv(self.a)
        return AffineMap(f, ai, f.neg(f.mul(ai, self.b)))

    def power(self, i: int) -> "AffineMap":
        """``self`` composed with itself ``i`` times; negative ``i`` inverts."""
        if i < 0:
            return self.inverse().power(-i)
        f = self.field
        if self.a == 1:
            # x + i*b, with i reduced mod p since b lives in characteristic p
            return AffineMap(f, 1, f.mul(i % f.p, self.b))
        ai = f.pow(self.a, i)
        frac = f.div(f.sub(ai, 1), f.sub(self.a, 1))
        return AffineMap(f, ai, f.mul(self.b, frac))

    def __pow__(self, i: int) -> "AffineMap":
        return self.power(i)

    def order(self) -> int:
        if self.a != 1:
            return self.field.order(self.a)
        return 1 if self.b == 0 else self.field.p

    def is_identity(self) -> bool:
        return self.a == 1 and self.b == 0

    def is_fixed_point(self, z) -> bool:
        return int(self(int(z))) == int(z)

    def fixed_points(self) -> list[int]:
        pts = np.arange(self.field.q)
        return np.flatnonzero(self(pts) == pts).tolist()

    def orbit(self, z, length: int) -> list[int]:
        """``[z, l(z), ..., l^(length-1)(z)]``."""
        out = []
        cur = int(z)
        for _ in range(length):
            out.append(cur)
            cur = int(self(cur))
        return out

    def orbit_array(self, z, length: int) -> np.ndarray:
        """Same as :meth:`orbit` via the closed form, vectorized over exponents."""
        f = self.field
        idx = np.arange(length, dtype=np.int64)
        if self.a == 1:
            return f.add(int(z), f.mul(idx % f.p, self.b))
        powers = _power_table(f, self.a, length)
        # l^i(z) = a^i z + b (a^i - 1)/(a - 1)
        c = f.div(self.b, f.sub(self.a, 1))
        return f.sub(f.mul(powers, f.add(int(z), c)), c)


def _power_table(f: FieldCtx, a: int, length: int) -> np.ndarray:
    out = np.empty(length, dtype=np.int64)
    cur = 1
    for i in range(length):
        out[i] = cur
        cur = f.mul(cur, a)
    return out


def compose(outer: AffineMap, inner: AffineMap) -> AffineMap:
    return outer.compose(inner)


def power(l: AffineMap, i: int) -> AffineMap:
    return l.power(i)


def order(l: AffineMap) -> int:
    return l.order()


def orbit(l: AffineMap, z, length: int) -> list[int]:
    return l.orbit(z, length)


def is_fixed_point(l: AffineMap, z) -> bool:
    return l.is_fixed_point(z)
