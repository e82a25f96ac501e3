"""Exact arithmetic over GF(p^m).

Elements are plain Python integers in ``[0, q)``.  The base-``p`` digits of an
element are the coefficients of its polynomial representative, lowest degree
first, so ``x + 1`` in GF(4) = GF(2)[x]/(x^2 + x + 1) is ``0b11 = 3``.

Prime fields use ordinary modular arithmetic.  Extension fields multiply
through exp/log tables built from a primitive element; for ``q <= 256`` full
addition and multiplication tables are also kept so the row operations used
by the linear-algebra layer reduce to list lookups.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .errors import FieldMismatch, FieldTooLarge, InvalidParams, NonPrimeP, ReducibleModulus

MAX_ORDER = 1 << 16
_FULL_TABLE_ORDER = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p), coefficient lists lowest degree first ---------


def _poly_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_rem(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    f = _poly_trim([c % p for c in f])
    g = _poly_trim([c % p for c in g])
    inv_lead = pow(g[-1], p - 2, p)
    dg = len(g) - 1
    while len(f) - 1 >= dg and f:
        c = f[-1] * inv_lead % p
        shift = len(f) - 1 - dg
        for i, gc in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gc) % p
        _poly_trim(f)
    return f


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    f = _poly_trim([c % p for c in modulus])
    m = len(f) - 1
    if m < 1:
        return False
    for d in range(1, m // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_rem(f, list(low) + [1], p):
                return False
    return True


def find_irreducible(p: int, m: int) -> list[int]:
    """Smallest monic irreducible polynomial of degree ``m`` (lexicographic on
    the coefficient list read from the constant term)."""
    for low in product(range(p), repeat=m):
        cand = list(low) + [1]
        if cand[0] != 0 and is_irreducible(cand, p):
            return cand
    raise ReducibleModulus(f"no irreducible polynomial of degree {m} over GF({p})")


class FieldSpec:
    """The finite field GF(p^m).

    Instances are immutable once built and compare equal when ``p``, ``m`` and
    the (monic-normalised) modulus agree.
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise NonPrimeP(f"characteristic {p} is not prime")
        if m < 1:
            raise InvalidParams(f"extension degree must be >= 1, got {m}")
        q = p**m
        if q > MAX_ORDER:
            raise FieldTooLarge(f"q = {q} exceeds {MAX_ORDER}")
        if m == 1:
            modulus = None
        else:
            if modulus is None:
                raise InvalidParams(f"GF({p}^{m}) needs an explicit modulus")
            mod = _poly_trim([int(c) % p for c in modulus])
            if len(mod) - 1 != m:
                raise ReducibleModulus(f"modulus {list(modulus)} does not have degree {m}")
            if not is_irreducible(mod, p):
                raise ReducibleModulus(f"modulus {list(modulus)} is reducible over GF({p})")
            inv = pow(mod[-1], p - 2, p)
            modulus = tuple(c * inv % p for c in mod)
        self.p = p
        self.m = m
        self.q = q
        self.modulus: tuple[int, ...] | None = modulus
        self._build_tables()

    # -- construction -----------------------------------------------------

    def _poly_mulmod(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da, db = self.to_digits(a), self.to_digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _poly_rem(prod, self.modulus, p)
        return self.from_digits(rem)

    def _build_tables(self) -> None:
        p, q = self.p, self.q
        if self.m == 1:
            mul = lambda a, b: a * b % p  # noqa: E731
        else:
            mul = self._poly_mulmod
        order = q - 1
        factors = _prime_factors(order) if order > 1 else []
        gen = 1
        for g in range(1, q):
            if g == 0:
                continue
            if all(self._pow_slow(g, order // r, mul) != 1 for r in factors):
                gen = g
                break
        self.generator = gen
        exp = [0] * (2 * order) if order else [1]
        log = [0] * q
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = mul(x, gen)
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        self._exp = exp
        self._log = log
        self._inv = [0] + [exp[(order - log[a]) % order] for a in range(1, q)]
        self._add_t = self._sub_t = self._mul_t = None
        if self.m > 1 and q <= _FULL_TABLE_ORDER:
            self._add_t = [[self._add_digits(a, b) for b in range(q)] for a in range(q)]
            self._sub_t = [[self._sub_digits(a, b) for b in range(q)] for a in range(q)]
            self._mul_t = [[self._mul_log(a, b) for b in range(q)] for a in range(q)]
        self._np_exp = np.array(exp, dtype=np.int64)
        self._np_log = np.array(log, dtype=np.int64)
        if self._add_t is not None:
            self._np_add = np.array(self._add_t, dtype=np.int64)
            self._np_sub = np.array(self._sub_t, dtype=np.int64)
            self._np_mul = np.array(self._mul_t, dtype=np.int64)

    @staticmethod
    def _pow_slow(a: int, e: int, mul) -> int:
        r = 1
        while e:
            if e & 1:
                r = mul(r, a)
            a = mul(a, a)
            e >>= 1
        return r

    # -- digits -----------------------------------------------------------

    def to_digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(a % p)
            a //= p
        return out

    def from_digits(self, digits: Sequence[int]) -> int:
        v = 0
        for c in reversed(list(digits)[: self.m]):
            v = v * self.p + c
        return v

    def _add_digits(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        return self.from_digits([(x + y) % p for x, y in zip(self.to_digits(a), self.to_digits(b))])

    def _sub_digits(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        return self.from_digits([(x - y) % p for x, y in zip(self.to_digits(a), self.to_digits(b))])

    def _mul_log(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    # -- scalar arithmetic --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self._add_t is not None:
            return self._add_t[a][b]
        return self._add_digits(a, b)

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        if self._sub_t is not None:
            return self._sub_t[a][b]
        return self._sub_digits(a, b)

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        return self._mul_log(a, b)

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        order = self.q - 1
        return self._exp[(self._log[a] * e) % order]

    # -- row helpers used by the linear algebra ------------------------------

    def axpy(self, x: Sequence[int], c: int, y: Sequence[int]) -> list[int]:
        """Return ``x - c*y`` componentwise."""
        if self.m == 1:
            p = self.p
            return [(a - c * b) % p for a, b in zip(x, y)]
        if self._sub_t is not None:
            sub, mc = self._sub_t, self._mul_t[c]
            return [sub[a][mc[b]] for a, b in zip(x, y)]
        return [self.sub(a, self.mul(c, b)) for a, b in zip(x, y)]

    def scale(self, x: Sequence[int], c: int) -> list[int]:
        if self.m == 1:
            p = self.p
            return [a * c % p for a in x]
        return [self.mul(c, a) for a in x]

    def dot(self, x: Sequence[int], y: Sequence[int]) -> int:
        if self.m == 1:
            return sum(a * b for a, b in zip(x, y)) % self.p
        acc = 0
        for a, b in zip(x, y):
            if a and b:
                acc = self.add(acc, self.mul(a, b))
        return acc

    # -- vectorised arithmetic on integer arrays ---------------------------

    def np_add(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.m == 1:
            return (x + y) % self.p
        if self.p == 2:
            return np.bitwise_xor(x, y)
        if self._add_t is not None:
            return self._np_add[x, y]
        return self._np_digitwise(x, y, 1)

    def np_sub(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.m == 1:
            return (x - y) % self.p
        if self.p == 2:
            return np.bitwise_xor(x, y)
        if self._add_t is not None:
            return self._np_sub[x, y]
        return self._np_digitwise(x, y, -1)

    def np_mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.m == 1:
            return (x * y) % self.p
        x, y = np.broadcast_arrays(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))
        out = self._np_exp[self._np_log[x] + self._np_log[y]]
        return np.where((x == 0) | (y == 0), 0, out)

    def _np_digitwise(self, x, y, sign: int) -> np.ndarray:
        p = self.p
        x, y = np.broadcast_arrays(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))
        out = np.zeros(x.shape, dtype=np.int64)
        place = 1
        for _ in range(self.m):
            d = ((x // place) % p + sign * ((y // place) % p)) % p
            out += d * place
            place *= p
        return out

    # -- misc -------------------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def nonzero_ordered(self) -> list[int]:
        """Powers of the primitive element: g^0, g^1, ..., g^(q-2)."""
        return self._exp[: self.q - 1]

    def elem(self, value: int) -> "Felt":
        return Felt(int(value) % self.q if self.m == 1 else int(value), self)

    def check(self, values: Iterable[int]) -> None:
        for v in values:
            if not (0 <= v < self.q):
                raise FieldMismatch(f"{v} is not an element of GF({self.q})")

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus) if self.modulus else []}

    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"


@dataclass(frozen=True)
class Felt:
    """A field element bound to its field.  Mostly for interactive use; the
    linear algebra works on raw integers."""

    value: int
    field: FieldSpec

    def __post_init__(self):
        if not (0 <= self.value < self.field.q):
            raise FieldMismatch(f"{self.value} is not an element of {self.field}")

    def _other(self, other) -> int:
        if isinstance(other, Felt):
            if other.field != self.field:
                raise FieldMismatch("elements of different fields")
            return other.value
        return self.field.elem(other).value

    def __add__(self, other):
        return Felt(self.field.add(self.value, self._other(other)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return Felt(self.field.sub(self.value, self._other(other)), self.field)

    def __rsub__(self, other):
        return Felt(self.field.sub(self._other(other), self.value), self.field)

    def __mul__(self, other):
        return Felt(self.field.mul(self.value, self._other(other)), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Felt(self.field.div(self.value, self._other(other)), self.field)

    def __neg__(self):
        return Felt(self.field.neg(self.value), self.field)

    def __pow__(self, e: int):
        if e < 0:
            return Felt(self.field.pow(self.field.inv(self.value), -e), self.field)
        return Felt(self.field.pow(self.value, e), self.field)

    def inv(self) -> "Felt":
        return Felt(self.field.inv(self.value), self.field)

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other) -> bool:
        if isinstance(other, Felt):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.field))

    def __repr__(self) -> str:
        return f"{self.value} in {self.field!r}"


def field_make(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build GF(p^m).  ``modulus`` lists coefficients lowest degree first and is
    required (and checked for irreducibility) when ``m > 1``."""
    return FieldSpec(p, m, modulus)


def gf(q: int) -> FieldSpec:
    """GF(q) for a prime power ``q``, using the smallest irreducible modulus."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    else:
        raise NonPrimeP(f"{q} is not a prime power")
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1 or not is_prime(p):
        raise NonPrimeP(f"{q} is not a prime power")
    if m == 1:
        return FieldSpec(p)
    if q > MAX_ORDER:
        raise FieldTooLarge(f"q = {q} exceeds {MAX_ORDER}")
    return FieldSpec(p, m, find_irreducible(p, m))
