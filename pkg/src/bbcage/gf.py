"""Exact arithmetic in GF(q) for prime powers q = p^k.

Elements are canonical small integers 0..q-1: the index packs the polynomial
coordinates base p (index = c0 + c1*p + ... + c_{k-1}*p^{k-1}), so 0 and 1 are
always the additive and multiplicative identities.  The modulus is the
lexicographically smallest monic irreducible of degree k over GF(p), read with
the highest-degree coefficient as the most significant digit; this makes every
element index, and hence every downstream coordinate, reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

MAX_ORDER = 1 << 16
_TABLE_LIMIT = 512  # build full q x q tables below this order


class FieldError(ValueError):
    """Domain violation in field construction or arithmetic."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# Polynomials over GF(p) are tuples of coefficients, constant term first.

def _poly_mod(num: tuple, den: tuple, p: int) -> tuple:
    """Remainder of num by den (den monic), trailing zeros stripped."""
    rem = list(num)
    dd = len(den) - 1
    while len(rem) - 1 >= dd and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dd:
            break
        coef = rem[-1]
        shift = len(rem) - 1 - dd
        for i, c in enumerate(den):
            rem[shift + i] = (rem[shift + i] - coef * c) % p
        while rem and rem[-1] == 0:
            rem.pop()
    return tuple(rem)


def _irreducible(poly: tuple, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if _poly_mod(poly, tail + (1,), p) == ():
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple:
    """Smallest monic irreducible of degree k, ordered by base-p digits."""
    for t in range(p ** k):
        coeffs = []
        r = t
        for _ in range(k):
            coeffs.append(r % p)
            r //= p
        poly = tuple(coeffs) + (1,)
        if _irreducible(poly, p):
            return poly
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")


class Field:
    """The finite field GF(p^k) with deterministic element indexing."""

    def __init__(self, p: int, k: int):
        if not _is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if k < 1:
            raise FieldError(f"extension degree must be >= 1, got {k}")
        q = p ** k
        if q > MAX_ORDER:
            raise FieldError(f"field order {q} exceeds cap {MAX_ORDER}")
        self.p = p
        self.k = k
        self.q = q
        self.modulus = _smallest_irreducible(p, k)
        # powers of x^j mod modulus for j = k..2k-2, used in reduction
        self._xpow = []
        cur = self._decode(1)
        for _ in range(k):
            cur = self._shift(cur)
        for _ in range(max(k - 1, 0)):
            self._xpow.append(cur)
            cur = self._shift(cur)
        self._add_t = self._mul_t = self._inv_t = None
        if q <= _TABLE_LIMIT:
            self._build_tables()

    # -- representation helpers -------------------------------------------

    def _decode(self, i: int) -> list:
        cs = []
        for _ in range(self.k):
            cs.append(i % self.p)
            i //= self.p
        return cs

    def _encode(self, cs) -> int:
        val = 0
        for c in reversed(cs):
            val = val * self.p + c
        return val

    def _shift(self, cs: list) -> list:
        """Multiply by x and reduce by the modulus (coefficient lists, len k)."""
        p, k = self.p, self.k
        top = cs[k - 1]
        out = [0] + cs[: k - 1]
        if top:
            for i in range(k):
                out[i] = (out[i] - top * self.modulus[i]) % p
        return out

    def _build_tables(self):
        q = self.q
        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                s = self._add_slow(a, b)
                add[a][b] = add[b][a] = s
                m = self._mul_slow(a, b)
                mul[a][b] = mul[b][a] = m
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a][b] == 1:
                    inv[a] = b
                    break
        self._add_t, self._mul_t, self._inv_t = add, mul, inv

    def _add_slow(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        ca, cb = self._decode(a), self._decode(b)
        return self._encode([(x + y) % self.p for x, y in zip(ca, cb)])

    def _mul_slow(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return (a * b) % p
        ca, cb = self._decode(a), self._decode(b)
        conv = [0] * (2 * k - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    conv[i + j] += x * y
        out = [c % p for c in conv[:k]]
        for j in range(k, 2 * k - 1):
            c = conv[j] % p
            if c:
                xp = self._xpow[j - k]
                for i in range(k):
                    out[i] = (out[i] + c * xp[i]) % p
        return self._encode(out)

    # -- arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add_t is not None:
            return self._add_t[a][b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self._encode([(-c) % self.p for c in self._decode(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_t is not None:
            return self._mul_t[a][b]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("0 has no multiplicative inverse")
        if self._inv_t is not None:
            return self._inv_t[a]
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        e %= self.q - 1 if a != 0 else 1
        if a == 0:
            return 0 if e else 1
        out, base = 1, a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def elements(self) -> range:
        return range(self.q)

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"GF({self.q})"


@dataclass(frozen=True)
class FieldElement:
    """An element of a specific Field; raises on mixed-field arithmetic."""

    field: Field
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.field.q:
            raise FieldError(f"index {self.index} out of range for {self.field}")

    def _peer(self, other: "FieldElement") -> int:
        if not isinstance(other, FieldElement):
            raise FieldError(f"cannot combine {self} with {other!r}")
        if other.field != self.field:
            raise FieldError(f"mixed-field operands: {self.field} vs {other.field}")
        return other.index

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.index, self._peer(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.index, self._peer(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.index, self._peer(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.index))

    def __int__(self):
        return self.index


@lru_cache(maxsize=None)
def field_new(p: int, k: int) -> Field:
    """The canonical GF(p^k); cached so equal parameters share one object."""
    return Field(p, k)


def field_of_order(q: int) -> Field:
    """GF(q) for a prime power q, factoring q as p^k."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = q
    for d in range(2, int(q ** 0.5) + 1):
        if q % d == 0:
            p = d
            break
    k = 0
    r = q
    while r % p == 0 and r > 1:
        r //= p
        k += 1
    if r != 1:
        raise FieldError(f"{q} is not a prime power")
    return field_new(p, k)
