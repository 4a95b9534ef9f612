"""Arithmetic in GF(p) for odd primes p < 2**64.

Most of the package works on plain ``int`` residues for speed; the
:class:`FieldElement` wrapper exists for callers who want operator
overloading and modulus checking.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

from .errors import DivisionByZero, InvalidOrder, ModulusMismatch, NotPrimeError

# Deterministic for every n < 3.3e24, which covers 64-bit inputs.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 2**64."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b == g == gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise DivisionByZero(f"0 has no inverse mod {p}")
    g, s, _ = xgcd(a, p)
    if g != 1:  # pragma: no cover - p is prime
        raise DivisionByZero(f"{a} not invertible mod {p}")
    return s % p


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1} via Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _factor_small(n: int) -> list[int]:
    primes = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            primes.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        primes.append(n)
    return primes


@dataclass(frozen=True)
class PrimeModulus:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 3 or self.p >= 2**64:
            raise NotPrimeError(f"modulus must be an odd prime below 2**64, got {self.p!r}")
        if not is_prime(self.p):
            raise NotPrimeError(f"{self.p} is not prime")

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value % self.p, self)

    def __int__(self) -> int:
        return self.p

    def inv(self, a: int) -> int:
        return inv_mod(a, self.p)

    def legendre(self, a: int) -> int:
        return legendre(a, self.p)

    @property
    def primitive_root(self) -> int:
        return primitive_root(self.p)

    def quadratic_residues(self) -> frozenset[int]:
        return frozenset(x * x % self.p for x in range(1, self.p))


@lru_cache(maxsize=None)
def modulus(p: int) -> PrimeModulus:
    """Cached :class:`PrimeModulus` constructor."""
    return PrimeModulus(p)


@lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    factors = _factor_small(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    return 1  # p == 2 only; never reached for odd primes > 2


@dataclass(frozen=True)
class FieldElement:
    value: int
    modulus: PrimeModulus = field(repr=False)

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.p:
            object.__setattr__(self, "value", self.value % self.modulus.p)

    def _coerce(self, other: Union["FieldElement", int]) -> int:
        if isinstance(other, FieldElement):
            if other.modulus.p != self.modulus.p:
                raise ModulusMismatch(f"GF({self.modulus.p}) vs GF({other.modulus.p})")
            return other.value
        return other % self.modulus.p

    def _new(self, v: int) -> "FieldElement":
        return FieldElement(v % self.modulus.p, self.modulus)

    def __add__(self, other):
        return self._new(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._new(self.value - self._coerce(other))

    def __rsub__(self, other):
        return self._new(self._coerce(other) - self.value)

    def __mul__(self, other):
        return self._new(self.value * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def inverse(self) -> "FieldElement":
        return self._new(inv_mod(self.value, self.modulus.p))

    def __truediv__(self, other):
        return self * self._new(self._coerce(other)).inverse()

    def __rtruediv__(self, other):
        return self._new(self._coerce(other)) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return self._new(pow(self.value, k, self.modulus.p))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.value == other.value and self.modulus.p == other.modulus.p
        if isinstance(other, int):
            return self.value == other % self.modulus.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus.p))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)


def field_inverse(a: FieldElement) -> FieldElement:
    return a.inverse()


def legendre_symbol(a: FieldElement) -> int:
    return legendre(a.value, a.modulus.p)


@dataclass(frozen=True)
class SubgroupZd:
    """The unique multiplicative subgroup of GF(p)* of order d."""

    modulus: PrimeModulus
    d: int
    elements: frozenset[int]

    def __contains__(self, x) -> bool:
        return int(x) % self.modulus.p in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def symmetric(self) -> bool:
        """True iff -1 is in the subgroup, i.e. Z_d = -Z_d."""
        return (self.modulus.p - 1) in self.elements


def subgroup_of_order(p: PrimeModulus | int, d: int) -> SubgroupZd:
    mod = p if isinstance(p, PrimeModulus) else modulus(p)
    q = mod.p
    if d <= 1 or (q - 1) % d:
        raise InvalidOrder(f"{d} is not a divisor > 1 of p-1 = {q - 1}")
    h = pow(primitive_root(q), (q - 1) // d, q)
    elems, x = set(), 1
    for _ in range(d):
        elems.add(x)
        x = x * h % q
    return SubgroupZd(mod, d, frozenset(elems))
