"""Arithmetic in GF(p^r).

Elements are stored in the polynomial basis. Everywhere outside the
:class:`FieldElement` convenience wrapper an element is handled through its
integer serialization ``sum(c[i] * p**i)``, which lets polynomials and
matrices live in plain ``numpy.int64`` arrays. All vectorized operations on
:class:`FieldCtx` accept Python ints or integer arrays and broadcast like
numpy ufuncs.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterator, Sequence

import numpy as np
from sympy import factorint, isprime

from ..errors import (
    FieldMismatchError,
    NoModulusFoundError,
    NotPrimeError,
    ReducibleModulusError,
    UnsupportedFieldError,
    ZeroElementError,
)

TABLE_LIMIT = 1 << 16
ADD_TABLE_LIMIT = 1 << 10
_MAX_P = 1 << 31
_MAX_Q = 1 << 62


# -- dense polynomials over the prime field, little-endian int lists ------
# Only used to validate and search for a modulus.

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pdivmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    quot = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % p
        if c:
            quot[k - db] = c
            for i, bi in enumerate(b):
                a[k - db + i] = (a[k - db + i] - c * bi) % p
    return _trim(quot), _trim(a[:db])


def _pmulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pdivmod(_trim(out), f, p)[1]


def _ppow_mod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    return a


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible_mod_p(f: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic ``f`` (little-endian) over GF(p)."""
    f = _trim([c % p for c in f])
    r = len(f) - 1
    if r < 1:
        return False
    if r == 1:
        return True
    x = [0, 1]

    def frob(k: int) -> list[int]:
        h = x
        for _ in range(k):
            h = _ppow_mod(h, p, f, p)
        return h

    if _psub(frob(r), x, p):
        return False
    for d in factorint(r):
        if len(_pgcd(f, _psub(frob(r // d), x, p), p)) > 1:
            return False
    return True


class FieldCtx:
    """The finite field GF(p^r), immutable after construction.

    Use :func:`field_create` rather than calling the constructor with an
    unchecked modulus.
    """

    def __init__(self, p: int, r: int, modulus: tuple[int, ...] | None):
        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = modulus
        self._pows = np.array([p**i for i in range(r)], dtype=np.int64)
        self._exp: np.ndarray | None = None
        self._log: np.ndarray | None = None
        self._add_table: np.ndarray | None = None
        self.primitive = self._find_primitive()
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    # -- construction helpers ----------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        if self.r == 1:
            return a * b % self.p
        p, r, mod = self.p, self.r, self.modulus
        da = [(a // p**i) % p for i in range(r)]
        db = [(b // p**i) % p for i in range(r)]
        prod = [0] * (2 * r - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        for k in range(2 * r - 2, r - 1, -1):
            c = prod[k] % p
            if c:
                for i in range(r + 1):
                    prod[k - r + i] -= c * mod[i]
        return sum((prod[i] % p) * p**i for i in range(r))

    def _raw_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._raw_mul(result, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return result

    @cached_property
    def _order_factors(self) -> tuple[int, ...]:
        return tuple(factorint(self.q - 1))

    def _raw_order(self, a: int) -> int:
        order = self.q - 1
        for f in self._order_factors:
            while order % f == 0 and self._raw_pow(a, order // f) == 1:
                order //= f
        return order

    def _find_primitive(self) -> int:
        if self.q == 2:
            return 1
        for g in range(2, self.q):
            if self._raw_order(g) == self.q - 1:
                return g
        raise RuntimeError(f"no primitive element found in GF({self.q})")

    def _build_tables(self) -> None:
        q = self.q
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        v = 1
        for i in range(q - 1):
            exp[i] = v
            log[v] = i
            v = self._raw_mul(v, self.primitive)
        exp[q - 1:] = exp[: q - 1]
        self._exp, self._log = exp, log
        if self.r > 1 and q <= ADD_TABLE_LIMIT:
            d = self.digits(np.arange(q))
            self._add_table = self.from_digits((d[:, None, :] + d[None, :, :]) % self.p)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.r, self.modulus))

    def __repr__(self) -> str:
        if self.r == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.r}, modulus={list(self.modulus)})"

    def check_same(self, other: "FieldCtx") -> None:
        if self != other:
            raise FieldMismatchError(f"{self!r} vs {other!r}")

    # -- elements ----------------------------------------------------------

    def __call__(self, value: int) -> "FieldElement":
        value = int(value)
        if not 0 <= value < self.q:
            raise ValueError(f"serialized element {value} outside [0, {self.q})")
        return FieldElement(self, value)

    def elements(self) -> Iterator["FieldElement"]:
        return (FieldElement(self, v) for v in range(self.q))

    @property
    def gamma(self) -> "FieldElement":
        return FieldElement(self, self.primitive)

    def digits(self, a) -> np.ndarray:
        """Polynomial-basis coordinates, shape ``a.shape + (r,)``."""
        return (np.asarray(a, dtype=np.int64)[..., None] // self._pows) % self.p

    def from_digits(self, d) -> np.ndarray:
        return (np.asarray(d, dtype=np.int64) * self._pows).sum(axis=-1)

    def random(self, rng: np.random.Generator, size=None, nonzero: bool = False):
        lo = 1 if nonzero else 0
        return rng.integers(lo, self.q, size=size, dtype=np.int64)

    # -- vectorized arithmetic ---------------------------------------------

    @staticmethod
    def _out(res, *args):
        if all(isinstance(a, (int, np.integer)) for a in args):
            return int(res)
        return res

    def add(self, a, b):
        if self.r == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._out(self._add_table[a, b], a, b)
        res = self.from_digits((self.digits(a) + self.digits(b)) % self.p)
        return self._out(res, a, b)

    def neg(self, a):
        if self.r == 1:
            return (-a) % self.p
        return self._out(self.from_digits((-self.digits(a)) % self.p), a)

    def sub(self, a, b):
        if self.r == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.r == 1:
            return (a * b) % self.p
        if self._exp is not None:
            a_, b_ = np.asarray(a), np.asarray(b)
            res = self._exp[self._log[a_] + self._log[b_]]
            res = np.where((a_ == 0) | (b_ == 0), 0, res)
            return self._out(res, a, b)
        res = np.frompyfunc(self._raw_mul, 2, 1)(a, b)
        return self._out(np.asarray(res, dtype=np.int64), a, b)

    def inv(self, a):
        a_ = np.asarray(a)
        if np.any(a_ == 0):
            raise ZeroElementError("zero has no multiplicative inverse")
        if self._exp is not None:
            return self._out(self._exp[(self.q - 1 - self._log[a_]) % (self.q - 1)], a)
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return self._out(np.ones_like(np.asarray(a)), a)
        if self._exp is not None:
            a_ = np.asarray(a)
            res = self._exp[(self._log[a_] * (e % (self.q - 1))) % (self.q - 1)]
            return self._out(np.where(a_ == 0, 0, res), a)
        if isinstance(a, (int, np.integer)):
            return self._raw_pow(int(a), e)
        return np.asarray(np.frompyfunc(lambda v: self._raw_pow(int(v), e), 1, 1)(a),
                          dtype=np.int64)

    def order(self, a) -> int:
        """Multiplicative order of a nonzero element."""
        a = int(a)
        if a == 0:
            raise ZeroElementError("the zero element has no multiplicative order")
        return self._raw_order(a)

    def sum(self, a, axis=None):
        a = np.asarray(a, dtype=np.int64)
        if self.r == 1:
            return a.sum(axis=axis) % self.p
        d = self.digits(a)
        if axis is None:
            d = d.reshape(-1, self.r)
            axis = 0
        elif axis < 0:
            axis -= 1
        return self.from_digits(d.sum(axis=axis) % self.p)

    def matmul(self, a, b) -> np.ndarray:
        """Matrix product over the field for 2-D integer arrays."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if a.shape[1] != b.shape[0]:
            raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
        if self.r == 1:
            from .linalg import matmul_mod

            return matmul_mod(a, b, self.p).astype(np.int64)
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for k in range(a.shape[1]):
            out = self.add(out, self.mul(a[:, k, None], b[None, k, :]))
        return out


class FieldElement:
    """A single element of a :class:`FieldCtx` with operator overloading.

    Python ints mix in as multiples of the identity, so ``2 * a`` means
    ``a + a`` in every characteristic.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FieldCtx, value: int):
        self.field = field
        self.value = int(value)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            self.field.check_same(other.field)
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        return NotImplemented

    def _wrap(self, v) -> "FieldElement":
        return FieldElement(self.field, v)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.field.digits(self.value))

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(o, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, int(e)))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def order(self) -> int:
        return self.field.order(self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == int(other) % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"{self.field!r}({self.value})"


def field_create(p: int, r: int = 1, modulus: Sequence[int] | None = None) -> FieldCtx:
    """Build GF(p^r).

    ``modulus`` is the little-endian coefficient list of a monic irreducible
    polynomial of degree ``r`` over GF(p). When omitted, the first irreducible
    one is taken in increasing order of ``sum(c[i] * p**i)`` over the lower
    coefficients. The primitive element is the least serialized integer of
    multiplicative order ``q - 1``.
    """
    if not isprime(p):
        raise NotPrimeError(f"{p} is not prime")
    if r < 1:
        raise ValueError("extension degree must be at least 1")
    if p >= _MAX_P or p**r >= _MAX_Q:
        raise UnsupportedFieldError(f"GF({p}^{r}) exceeds the supported element range")
    if r == 1:
        # Every monic linear modulus yields the same canonical representation.
        if modulus is not None and (len(modulus) != 2 or modulus[1] % p != 1):
            raise ValueError("modulus must be monic of degree r")
        return FieldCtx(p, 1, None)
    if modulus is not None:
        mod = [int(c) % p for c in modulus]
        if len(mod) != r + 1 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree r")
        if not is_irreducible_mod_p(mod, p):
            raise ReducibleModulusError(f"{mod} is reducible over GF({p})")
        return FieldCtx(p, r, tuple(mod))
    for code in range(p**r):
        mod = [(code // p**i) % p for i in range(r)] + [1]
        if mod[0] and is_irreducible_mod_p(mod, p):
            return FieldCtx(p, r, tuple(mod))
    raise NoModulusFoundError(f"no irreducible polynomial of degree {r} over GF({p})")


GF = field_create


def element_order(ctx: FieldCtx, a) -> int:
    return ctx.order(a)
