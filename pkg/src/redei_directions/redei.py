"""Rédei polynomials, the Szőnyi extension polynomial and the lacunarity bound.

For a point set U = {(a_i, b_i)} and a fixed slope y the Rédei polynomial is

    H(x, y) = prod (x + a_i*y - b_i),

whose roots are the projections A_y = {-a_i*y + b_i}. The extension
polynomial f(x, y) of degree p - |U| is built from the elementary symmetric
functions of the complement GF(p) minus A_y, obtained by the recursion

    sum_{i=0..k} sigma_i(A_y) * sigma_{k-i}(complement) = sigma_k(GF(p)),

which makes sense even when A_y has repeated elements. Whenever y is not a
determined direction, H * f = x^p - x. Writing

    H * f = x^p + h_1(y) x^{p-1} + ... + h_p(y),

each h_i has degree at most i, so for i <= p - 1 it is decided by its values
at the p points of GF(p). If h_i is not identically zero for some i != p - 1
then |D| >= p + 1 - i, provided the vertical direction is determined.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .directions import PointSet, directions_of_pointset, is_collinear
from .errors import RangeError, SizeError
from .field import PrimeModulus
from .poly import DensePolynomial, poly_derivative, poly_divrem, poly_gcd, truncated_power, _mul_coeffs

# The batched path keeps every intermediate below p**3, which must fit in int64.
_BATCH_P_LIMIT = 1 << 20

__all__ = [
    "PointSet",
    "RootMultiset",
    "SigmaTable",
    "HFlag",
    "CoefficientProfile",
    "LemmaReport",
    "roots_at_y",
    "elementary_symmetric",
    "complement_sigmas",
    "build_f_at_y",
    "redei_H_at_y",
    "x_p_minus_x",
    "product_check",
    "product_check_all",
    "h_values",
    "coefficient_profile",
    "lacunarity_lower_bound",
    "lemma_divisibility_check",
]


@dataclass(frozen=True)
class RootMultiset:
    counts: tuple[int, ...]
    modulus: PrimeModulus

    @property
    def size(self) -> int:
        return sum(self.counts)

    @property
    def distinct(self) -> bool:
        return all(c <= 1 for c in self.counts)

    def elements(self) -> list[int]:
        return [v for v, c in enumerate(self.counts) for _ in range(c)]


@dataclass(frozen=True)
class SigmaTable:
    sigma: tuple[int, ...]
    modulus: PrimeModulus
    n: int

    def __getitem__(self, k: int) -> int:
        return self.sigma[k]

    def __len__(self):
        return len(self.sigma)


def roots_at_y(U: PointSet, y0: int) -> RootMultiset:
    p = U.p
    y0 = int(y0) % p
    counts = [0] * p
    for a, b in U.points:
        counts[(b - a * y0) % p] += 1
    return RootMultiset(tuple(counts), U.modulus)


def _sigmas_of(values, p: int) -> list[int]:
    # coefficients of prod (1 + e t), lowest first
    sig = [1]
    for e in values:
        sig.append(0)
        for k in range(len(sig) - 1, 0, -1):
            sig[k] = (sig[k] + e * sig[k - 1]) % p
    return sig


def elementary_symmetric(ms: RootMultiset) -> SigmaTable:
    p = ms.modulus.p
    sig = _sigmas_of(ms.elements(), p)
    return SigmaTable(tuple(sig), ms.modulus, len(sig) - 1)


def _sigma_full_field(k: int, p: int) -> int:
    # prod_{c in GF(p)} (1 + c t) = 1 - t^(p-1)
    if k == 0:
        return 1
    return p - 1 if k == p - 1 else 0


def complement_sigmas(st: SigmaTable, k_max: int) -> SigmaTable:
    """sigma_k(GF(p) minus A) for k = 0..k_max from the sigmas of A."""
    p, n = st.modulus.p, st.n
    if k_max < 0 or k_max > p - n:
        raise RangeError(f"k_max must lie in [0, {p - n}], got {k_max}")
    sig = st.sigma
    tau = [1]
    for k in range(1, k_max + 1):
        acc = _sigma_full_field(k, p)
        for i in range(1, min(k, n) + 1):
            acc -= sig[i] * tau[k - i]
        tau.append(acc % p)
    return SigmaTable(tuple(tau), st.modulus, p - n)


def build_f_at_y(U: PointSet, y0: int) -> DensePolynomial:
    p, n = U.p, len(U)
    if n >= p:
        raise SizeError(f"extension polynomial needs |U| < p, got |U| = {n}, p = {p}")
    m = p - n
    tau = complement_sigmas(elementary_symmetric(roots_at_y(U, y0)), m).sigma
    coeffs = [0] * (m + 1)
    for j, t in enumerate(tau):
        coeffs[m - j] = -t if j % 2 else t
    return DensePolynomial(tuple(coeffs), U.modulus)


def redei_H_at_y(U: PointSet, y0: int) -> DensePolynomial:
    p = U.p
    return DensePolynomial.from_roots(((b - a * y0) % p for a, b in U.points), U.modulus)


def x_p_minus_x(p) -> DensePolynomial:
    q = p.p if isinstance(p, PrimeModulus) else p
    return DensePolynomial.from_ints([0, -1] + [0] * (q - 2) + [1], p)


def product_check(U: PointSet, y0: int) -> bool:
    """True iff H(x, y0) * f(x, y0) == x^p - x."""
    prod = redei_H_at_y(U, y0) * build_f_at_y(U, y0)
    return prod == x_p_minus_x(U.modulus)


def _product_table(U: PointSet) -> np.ndarray:
    """Row y holds the coefficients of H(x, y) f(x, y), highest degree first.

    Column i is therefore h_i(y); column 0 is the leading 1.
    """
    p, n = U.p, len(U)
    m = p - n
    a = np.array([pt[0] for pt in U.points], dtype=np.int64)
    b = np.array([pt[1] for pt in U.points], dtype=np.int64)
    ys = np.arange(p, dtype=np.int64)
    roots = (b[None, :] - (ys[:, None] * a[None, :]) % p) % p

    sig = np.zeros((p, n + 1), dtype=np.int64)
    sig[:, 0] = 1
    for j in range(n):
        e = roots[:, j : j + 1]
        sig[:, 1 : j + 2] = (sig[:, 1 : j + 2] + e * sig[:, 0 : j + 1]) % p

    tau = np.zeros((p, m + 1), dtype=np.int64)
    tau[:, 0] = 1
    for k in range(1, m + 1):
        kk = min(k, n)
        prev = tau[:, k - kk : k][:, ::-1]  # tau_{k-1}, ..., tau_{k-kk}
        acc = (sig[:, 1 : kk + 1] * prev).sum(axis=1) % p
        tau[:, k] = (_sigma_full_field(k, p) - acc) % p

    out = np.zeros((p, p + 1), dtype=np.int64)
    for j in range(n + 1):
        out[:, j : j + m + 1] = (out[:, j : j + m + 1] + sig[:, j : j + 1] * tau) % p
    out[:, 1::2] = (-out[:, 1::2]) % p
    return out


def _product_table_scalar(U: PointSet) -> list[list[int]]:
    p = U.p
    rows = []
    for y in range(p):
        prod = redei_H_at_y(U, y) * build_f_at_y(U, y)
        rows.append([prod.coeff(p - i) for i in range(p + 1)])
    return rows


def h_values(U: PointSet, batched: bool = True) -> list[list[int]]:
    """Table t[y][i] = h_i(y) for y in GF(p), i = 0..p (h_0 = 1)."""
    if len(U) >= U.p:
        raise SizeError(f"extension polynomial needs |U| < p, got |U| = {len(U)}, p = {U.p}")
    if batched and U.p < _BATCH_P_LIMIT:
        return _product_table(U).tolist()
    return _product_table_scalar(U)


def product_check_all(U: PointSet, batched: bool = True) -> list[bool]:
    """product_check for every y0 in GF(p) at once."""
    p = U.p
    target = [0] * (p + 1)
    target[0] = 1
    target[p - 1] = p - 1
    return [row == target for row in h_values(U, batched)]


class HFlag(enum.Enum):
    IDENTICALLY_ZERO = "zero"
    NONZERO = "nonzero"


@dataclass(frozen=True)
class CoefficientProfile:
    """Which of h_1 .. h_{p-1} vanish identically.

    ``shear`` records the slope that was moved to the vertical direction so
    that the vertical direction is determined (None if it already was).
    """

    p: int
    size: int
    flags: tuple[HFlag, ...]  # flags[i - 1] describes h_i
    collinear: bool
    shear: int | None = None
    first_nonzero_index: int | None = field(init=False)

    def __post_init__(self):
        first = next((i + 1 for i, f in enumerate(self.flags) if f is HFlag.NONZERO), None)
        object.__setattr__(self, "first_nonzero_index", first)

    def flag(self, i: int) -> HFlag:
        return self.flags[i - 1]


def _vertical_coordinates(U: PointSet) -> tuple[PointSet, int | None]:
    """Re-coordinatize U so that the vertical direction is determined.

    The smallest finite determined slope s is sent to the vertical by the
    invertible linear map (a, b) -> (b - s*a, a); direction counts are kept.
    """
    firsts = [a for a, _ in U.points]
    if len(set(firsts)) < len(firsts) or len(U) < 2:
        return U, None
    s = directions_of_pointset(U).finite()[0]
    p = U.p
    return PointSet.of((((b - s * a) % p, a) for a, b in U.points), U.modulus), s


def coefficient_profile(U: PointSet, batched: bool = True) -> CoefficientProfile:
    p, n = U.p, len(U)
    if n >= p:
        raise SizeError(f"coefficient profile needs |U| < p, got |U| = {n}, p = {p}")
    V, shear = _vertical_coordinates(U)
    table = h_values(V, batched)
    flags = tuple(
        HFlag.NONZERO if any(row[i] for row in table) else HFlag.IDENTICALLY_ZERO
        for i in range(1, p)
    )
    return CoefficientProfile(p, n, flags, is_collinear(U), shear)


def lacunarity_lower_bound(cp: CoefficientProfile) -> int:
    """Lower bound on |D| from the first non-vanishing h_i, i <= p - 2."""
    if cp.collinear:
        return 1 if cp.size >= 2 else 0
    for i in range(1, cp.p - 1):
        if cp.flags[i - 1] is HFlag.NONZERO:
            return cp.p + 1 - i
    return 2


@dataclass
class LemmaReport:
    hypotheses: dict[str, bool]
    K: int
    residue: DensePolynomial
    divisible: bool

    @property
    def hypotheses_ok(self) -> bool:
        return all(self.hypotheses.values())

    @property
    def counterexample(self) -> bool:
        """True would contradict the divisibility lemma."""
        return self.hypotheses_ok and self.divisible

    def failed(self) -> list[str]:
        return [k for k, v in self.hypotheses.items() if not v]


def lemma_divisibility_check(R: DensePolynomial, S: DensePolynomial, m: int) -> LemmaReport:
    """Decide whether x^(deg R + deg S + 1) divides R^m S - 1.

    Hypotheses are evaluated and reported rather than enforced; under all of
    them the answer must be 'not divisible'.
    """
    R._check(S)
    p = R.p
    deg_ok = not R.is_zero() and R.degree >= 1
    hyp = {
        "R_constant_term_1": R.coeff(0) == 1,
        "S_constant_term_1": S.coeff(0) == 1,
        "deg_R_at_least_1": deg_ok,
        "R_coprime_to_derivative": deg_ok and poly_gcd(R, poly_derivative(R)).degree == 0,
        "R_does_not_divide_S": deg_ok and not poly_divrem(S, R)[1].is_zero(),
        "m_positive": m >= 1,
        "p_does_not_divide_m": m % p != 0,
    }
    deg_s = S.degree if not S.is_zero() else 0
    deg_r = R.degree if not R.is_zero() else 0
    K = int(deg_r + deg_s + 1)
    power = truncated_power(R, max(m, 0), K)
    prod = R._new(_mul_coeffs(power.coeffs, S.coeffs, p, K))
    residue = (prod - R._new([1])).truncate(K)
    return LemmaReport(hyp, K, residue, residue.is_zero())
