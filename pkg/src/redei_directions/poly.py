"""Dense univariate polynomials over GF(p), constant term first."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DivisionByZero, ModulusMismatch, UndefinedGcd
from .field import PrimeModulus, inv_mod, modulus

#: Degree of the zero polynomial. Comparisons work, integer arithmetic does not.
ZERO_DEGREE = -math.inf


def _strip(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _mul_coeffs(a: Sequence[int], b: Sequence[int], p: int, limit: int | None = None) -> list[int]:
    """Schoolbook product, optionally truncated to the first `limit` terms.

    Kept behind its own function so a sub-quadratic product can be swapped in.
    """
    if not a or not b:
        return []
    n = len(a) + len(b) - 1
    if limit is not None:
        n = min(n, limit)
    out = [0] * n
    for i, ai in enumerate(a):
        if ai == 0 or i >= n:
            continue
        for j in range(min(len(b), n - i)):
            out[i + j] += ai * b[j]
    return _strip([c % p for c in out])


@dataclass(frozen=True)
class DensePolynomial:
    coeffs: tuple[int, ...]
    modulus: PrimeModulus

    def __post_init__(self):
        p = self.modulus.p
        c = _strip([int(x) % p for x in self.coeffs])
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_ints(cls, coeffs: Iterable[int], p: int | PrimeModulus) -> "DensePolynomial":
        mod = p if isinstance(p, PrimeModulus) else modulus(p)
        return cls(tuple(coeffs), mod)

    @classmethod
    def monomial(cls, k: int, p: int | PrimeModulus, c: int = 1) -> "DensePolynomial":
        return cls.from_ints([0] * k + [c], p)

    @classmethod
    def from_roots(cls, roots: Iterable[int], p: int | PrimeModulus) -> "DensePolynomial":
        """prod (x - r) over the given roots (with multiplicity)."""
        mod = p if isinstance(p, PrimeModulus) else modulus(p)
        q = mod.p
        c = [1]
        for r in roots:
            nxt = [0] * (len(c) + 1)
            for i, ci in enumerate(c):
                nxt[i + 1] += ci
                nxt[i] -= r * ci
            c = [v % q for v in nxt]
        return cls(tuple(c), mod)

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _check(self, other: "DensePolynomial"):
        if other.modulus.p != self.modulus.p:
            raise ModulusMismatch(f"GF({self.p})[x] vs GF({other.p})[x]")

    def _new(self, coeffs) -> "DensePolynomial":
        return DensePolynomial(tuple(coeffs), self.modulus)

    def __add__(self, other: "DensePolynomial") -> "DensePolynomial":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return self._new(self.coeff(i) + other.coeff(i) for i in range(n))

    def __sub__(self, other: "DensePolynomial") -> "DensePolynomial":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return self._new(self.coeff(i) - other.coeff(i) for i in range(n))

    def __neg__(self) -> "DensePolynomial":
        return self._new(-c for c in self.coeffs)

    def __mul__(self, other) -> "DensePolynomial":
        if isinstance(other, int):
            return self._new(c * other for c in self.coeffs)
        self._check(other)
        return self._new(_mul_coeffs(self.coeffs, other.coeffs, self.p))

    __rmul__ = __mul__

    def __divmod__(self, other: "DensePolynomial"):
        return poly_divrem(self, other)

    def __floordiv__(self, other):
        return poly_divrem(self, other)[0]

    def __mod__(self, other):
        return poly_divrem(self, other)[1]

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * t + c) % self.p
        return acc

    def monic(self) -> "DensePolynomial":
        if not self.coeffs:
            return self
        li = inv_mod(self.lead, self.p)
        return self._new(c * li for c in self.coeffs)

    def truncate(self, k: int) -> "DensePolynomial":
        """Reduce modulo x**k."""
        return self._new(self.coeffs[:k])

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)


def poly_mul(a: DensePolynomial, b: DensePolynomial) -> DensePolynomial:
    return a * b


def poly_divrem(a: DensePolynomial, b: DensePolynomial) -> tuple[DensePolynomial, DensePolynomial]:
    a._check(b)
    if b.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    p = a.p
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    if len(rem) <= db:
        return a._new([]), a
    li = inv_mod(b.lead, p)
    quo = [0] * (len(rem) - db)
    bc = b.coeffs
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] * li % p
        if c == 0:
            continue
        quo[k - db] = c
        off = k - db
        for j in range(db + 1):
            rem[off + j] = (rem[off + j] - c * bc[j]) % p
    return a._new(quo), a._new(rem[:db])


def poly_gcd(a: DensePolynomial, b: DensePolynomial) -> DensePolynomial:
    """Monic gcd."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise UndefinedGcd("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, poly_divrem(a, b)[1]
    return a.monic()


def poly_derivative(a: DensePolynomial) -> DensePolynomial:
    return a._new(k * c for k, c in enumerate(a.coeffs) if k > 0)


def truncated_power(a: DensePolynomial, m: int, K: int) -> DensePolynomial:
    """a**m mod x**K by square-and-multiply, truncating at every step."""
    if m < 0 or K < 1:
        raise ValueError("need m >= 0 and K >= 1")
    p = a.p
    result = [1]
    base = list(a.coeffs[:K])
    while m:
        if m & 1:
            result = _mul_coeffs(result, base, p, K)
        m >>= 1
        if m:
            base = _mul_coeffs(base, base, p, K)
    return a._new(result)
