"""Exact arithmetic in finite fields GF(q): prime q and binary extensions GF(2^k).

Elements are represented by canonical integers in [0, q).  Prime fields
reduce modulo p; binary extension fields (k <= 16) multiply through
log/antilog tables built once at construction, so the per-operation cost
in the hot loops is two table lookups.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

MAX_PRIME_ORDER = 2**31
MAX_BINARY_DEGREE = 16

# Default reduction polynomials (bitmask including the leading term), one per
# degree 1..16.  All are primitive, so x generates the multiplicative group
# and the table build below succeeds on its first candidate; irreducibility
# is still verified explicitly at construction.
DEFAULT_BINARY_POLYS = {
    1: 0x3, 2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x83, 8: 0x11D,
    9: 0x211, 10: 0x409, 11: 0x805, 12: 0x1053, 13: 0x201B, 14: 0x4443,
    15: 0x8003, 16: 0x1100B,
}


class FieldError(ValueError):
    """Invalid field construction, element, or cross-field operand mix."""


def _is_prime(n: int) -> bool:
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


def _poly_deg(p: int) -> int:
    return p.bit_length() - 1


def _poly_mod(a: int, b: int) -> int:
    """Remainder of a modulo b in GF(2)[x], both as bitmasks."""
    db = _poly_deg(b)
    while a and _poly_deg(a) >= db:
        a ^= b << (_poly_deg(a) - db)
    return a


def _poly_irreducible(poly: int, k: int) -> bool:
    """Exhaustive trial division by every polynomial of degree 1..k//2."""
    for d in range(1, k // 2 + 1):
        for low in range(1 << d):
            if _poly_mod(poly, (1 << d) | low) == 0:
                return False
    return True


def _clmul_mod(a: int, b: int, poly: int, k: int) -> int:
    """Carry-less multiply of a and b reduced by poly (degree k)."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> k:
            a ^= poly
    return r


class Field:
    """Immutable descriptor of GF(q) plus arithmetic on canonical integers.

    The int-level methods (add, mul, inv, ...) are the hot path used by the
    linear algebra; `element` wraps a value as a FieldElement for operator
    syntax with cross-field checking.
    """

    kind: str
    characteristic: int
    degree: int
    q: int
    poly: int | None

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, self.canon(value))

    def canon(self, value: int) -> int:
        raise NotImplementedError

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        r, base = 1, a
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    def sample(self, rng: random.Random) -> int:
        """Draw a uniform element (zero included) from a seeded stream."""
        return rng.randrange(self.q)

    def elements(self) -> range:
        return range(self.q)

    @property
    def descriptor(self) -> str:
        raise NotImplementedError

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Field)
            and self.kind == other.kind
            and self.q == other.q
            and self.poly == other.poly
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.q, self.poly))

    def __repr__(self) -> str:
        return f"Field({self.descriptor})"


class PrimeField(Field):
    kind = "prime"
    poly = None

    def __init__(self, q: int):
        if not _is_prime(q):
            raise FieldError(f"order {q} is not prime")
        if q >= MAX_PRIME_ORDER:
            raise FieldError(f"prime order {q} exceeds supported bound 2^31")
        self.q = q
        self.characteristic = q
        self.degree = 1

    def canon(self, value: int) -> int:
        return value % self.q

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.q)

    @property
    def descriptor(self) -> str:
        return f"p:{self.q}"


class BinaryField(Field):
    kind = "binary"

    def __init__(self, k: int, poly: int | None = None):
        if not 1 <= k <= MAX_BINARY_DEGREE:
            raise FieldError(f"extension degree {k} outside supported range 1..16")
        if poly is None:
            poly = DEFAULT_BINARY_POLYS[k]
        if _poly_deg(poly) != k:
            raise FieldError(
                f"reduction polynomial {poly:#x} has degree {_poly_deg(poly)}, expected {k}"
            )
        if not _poly_irreducible(poly, k):
            raise FieldError(f"reduction polynomial {poly:#x} is reducible")
        self.q = 1 << k
        self.characteristic = 2
        self.degree = k
        self.poly = poly
        self._exp, self._log = self._build_tables()

    def _build_tables(self) -> tuple[list[int], list[int]]:
        # exp is doubled so mul can skip the mod-(q-1) on summed logs.
        q, n = self.q, self.q - 1
        if self.degree == 1:
            return [1, 1], [0, 0]
        for g in range(2, q):
            exp = [0] * (2 * n)
            log = [0] * q
            x, ok = 1, True
            for i in range(n):
                if x == 1 and i > 0:  # order of g divides i < n: not a generator
                    ok = False
                    break
                exp[i] = x
                log[x] = i
                x = _clmul_mod(x, g, self.poly, self.degree)
            if ok:
                exp[n:] = exp[:n]
                return exp, log
        raise FieldError(f"no multiplicative generator found for {self.descriptor}")

    def canon(self, value: int) -> int:
        if value < 0:
            raise FieldError("binary field values are non-negative bitmasks")
        return value if value < self.q else _poly_mod(value, self.poly)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    sub = add

    def neg(self, a: int) -> int:
        return a

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[self.q - 1 - self._log[a]]

    @property
    def descriptor(self) -> str:
        if self.poly == DEFAULT_BINARY_POLYS[self.degree]:
            return f"2^{self.degree}"
        return f"2^{self.degree}:{self.poly:x}"


@dataclass(frozen=True, slots=True)
class FieldElement:
    """A canonical representative paired with its field."""

    field: Field
    value: int

    def _peer(self, other: "FieldElement") -> int:
        if not isinstance(other, FieldElement):
            raise FieldError(f"cannot combine field element with {type(other).__name__}")
        if other.field != self.field:
            raise FieldError(
                f"cross-field operands: {self.field.descriptor} vs {other.field.descriptor}"
            )
        return other.value

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.add(self.value, self._peer(other)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.sub(self.value, self._peer(other)))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.mul(self.value, self._peer(other)))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.div(self.value, self._peer(other)))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.value))

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value}@{self.field.descriptor}"


@lru_cache(maxsize=None)
def prime_field(q: int) -> PrimeField:
    """GF(q) for prime q < 2^31."""
    return PrimeField(q)


@lru_cache(maxsize=None)
def binary_field(k: int, poly: int | None = None) -> BinaryField:
    """GF(2^k) for 1 <= k <= 16, with optional reduction-polynomial override."""
    return BinaryField(k, poly)


def parse_field(text: str) -> Field:
    """Parse a field descriptor: "p:<q>" or "2^<k>[:<poly-hex>]"."""
    text = text.strip()
    if text.startswith("p:"):
        body = text[2:]
        if not body.isdigit():
            raise FieldError(f"bad prime field descriptor {text!r}")
        return prime_field(int(body))
    if text.startswith("2^"):
        body = text[2:]
        poly: int | None = None
        if ":" in body:
            body, poly_hex = body.split(":", 1)
            try:
                poly = int(poly_hex, 16)
            except ValueError:
                raise FieldError(f"bad polynomial hex in descriptor {text!r}") from None
        if not body.isdigit():
            raise FieldError(f"bad binary field descriptor {text!r}")
        return binary_field(int(body), poly)
    raise FieldError(f"unrecognized field descriptor {text!r} (expected p:<q> or 2^<k>[:hex])")
