"""Direction sets of point sets in AG(2, p).

A direction is a slope in GF(p) or the vertical direction ``INF``. Direction
sets are flag arrays of length p + 1 with the vertical direction in slot p.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Union

from .errors import HypothesisError, TooFewPoints
from .field import PrimeModulus, inv_mod, modulus


class _Infinity:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "inf"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

Direction = Union[int, _Infinity]


@lru_cache(maxsize=16)
def inverse_table(p: int) -> tuple[int, ...]:
    """inv[x] = x^-1 mod p for x in 1..p-1; inv[0] = 0 as a placeholder."""
    inv = [0] * p
    if p > 1:
        inv[1] = 1
    for x in range(2, p):
        inv[x] = (p - (p // x) * inv[p % x] % p) % p
    return tuple(inv)


def _as_modulus(p) -> PrimeModulus:
    return p if isinstance(p, PrimeModulus) else modulus(int(p))


@dataclass(frozen=True)
class PointSet:
    """Deduplicated points of AG(2, p), stored as residue pairs in first-seen order."""

    points: tuple[tuple[int, int], ...]
    modulus: PrimeModulus

    def __post_init__(self):
        p = self.modulus.p
        seen = dict.fromkeys((a % p, b % p) for a, b in self.points)
        object.__setattr__(self, "points", tuple(seen))

    @classmethod
    def of(cls, points: Iterable[tuple[int, int]], p) -> "PointSet":
        return cls(tuple((int(a), int(b)) for a, b in points), _as_modulus(p))

    @property
    def p(self) -> int:
        return self.modulus.p

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def translate(self, s: int, t: int) -> "PointSet":
        return PointSet.of(((a + s, b + t) for a, b in self.points), self.modulus)


@dataclass(frozen=True)
class Grid:
    """Cartesian product A x B; A and B must have distinct elements."""

    A: tuple[int, ...]
    B: tuple[int, ...]
    modulus: PrimeModulus

    def __post_init__(self):
        p = self.modulus.p
        for name in ("A", "B"):
            vals = [int(v) % p for v in getattr(self, name)]
            if len(set(vals)) != len(vals):
                raise HypothesisError(f"{name} has repeated elements mod {p}")
            object.__setattr__(self, name, tuple(sorted(vals)))

    @classmethod
    def of(cls, A: Iterable[int], B: Iterable[int], p) -> "Grid":
        return cls(tuple(A), tuple(B), _as_modulus(p))

    @property
    def p(self) -> int:
        return self.modulus.p

    def expand(self) -> PointSet:
        return PointSet.of(((a, b) for a in self.A for b in self.B), self.modulus)


class DirectionSet:
    """Membership flags over the p + 1 directions of AG(2, p)."""

    __slots__ = ("p", "flags", "count")

    def __init__(self, p: int, flags: bytearray | None = None):
        self.p = p
        self.flags = flags if flags is not None else bytearray(p + 1)
        self.count = sum(self.flags)

    @classmethod
    def from_directions(cls, p: int, dirs: Iterable) -> "DirectionSet":
        flags = bytearray(p + 1)
        for d in dirs:
            flags[p if d is INF else int(d) % p] = 1
        return cls(p, flags)

    def __len__(self):
        return self.count

    def __contains__(self, d) -> bool:
        return bool(self.flags[self.p if d is INF else int(d) % self.p])

    def __iter__(self) -> Iterator:
        for i in range(self.p):
            if self.flags[i]:
                yield i
        if self.flags[self.p]:
            yield INF

    def __eq__(self, other):
        if not isinstance(other, DirectionSet):
            return NotImplemented
        return self.p == other.p and self.flags == other.flags

    def __repr__(self):
        return f"DirectionSet(p={self.p}, {self.render()})"

    @property
    def has_infinity(self) -> bool:
        return bool(self.flags[self.p])

    def finite(self) -> list[int]:
        return [i for i in range(self.p) if self.flags[i]]

    def slots(self) -> list[int]:
        """Machine form: sorted slot indices, vertical direction as p."""
        return [i for i in range(self.p + 1) if self.flags[i]]

    def render(self) -> str:
        return ", ".join(str(d) for d in self)

    def __or__(self, other: "DirectionSet") -> "DirectionSet":
        return DirectionSet(self.p, bytearray(x | y for x, y in zip(self.flags, other.flags)))


def slope(P: tuple[int, int], Q: tuple[int, int], p: int):
    da = (P[0] - Q[0]) % p
    if da == 0:
        return INF
    return (P[1] - Q[1]) * inv_mod(da, p) % p


def directions_of_pointset(U: PointSet) -> DirectionSet:
    """Exact direction set by enumerating all pairs."""
    pts = U.points
    if len(pts) < 2:
        raise TooFewPoints("need at least two points to determine a direction")
    p = U.p
    inv = inverse_table(p)
    flags = bytearray(p + 1)
    n = len(pts)
    for i in range(n):
        ai, bi = pts[i]
        for j in range(i + 1, n):
            aj, bj = pts[j]
            da = (ai - aj) % p
            if da == 0:
                flags[p] = 1
            else:
                flags[(bi - bj) * inv[da] % p] = 1
    return DirectionSet(p, flags)


def difference_set(A: Iterable[int], p: int) -> set[int]:
    A = list(A)
    return {(x - y) % p for x in A for y in A}


def directions_of_grid(G: Grid) -> DirectionSet:
    """Directions of A x B from the quotient set (B-B)/(A-A) plus 0 and inf."""
    if len(G.A) < 2 or len(G.B) < 2:
        raise TooFewPoints("both sides of a grid need at least two elements")
    p = G.p
    inv = inverse_table(p)
    da_flags = bytearray(p)
    db_flags = bytearray(p)
    for x in G.A:
        for y in G.A:
            da_flags[(x - y) % p] = 1
    for x in G.B:
        for y in G.B:
            db_flags[(x - y) % p] = 1
    inv_da = [inv[d] for d in range(1, p) if da_flags[d]]
    flags = bytearray(p + 1)
    flags[0] = 1
    flags[p] = 1
    for db in range(1, p):
        if db_flags[db]:
            for ia in inv_da:
                flags[db * ia % p] = 1
    return DirectionSet(p, flags)


def is_collinear(U: PointSet) -> bool:
    """True when all points lie on one line (single points count as collinear)."""
    pts = U.points
    if len(pts) <= 2:
        return True
    p = U.p
    d0 = slope(pts[0], pts[1], p)
    return all(slope(pts[0], q, p) == d0 for q in pts[2:])


def theorem1_bound(m: int, n: int) -> int:
    return m * n - min(m, n) + 2


def is_theorem1_tight(G: Grid) -> bool:
    m, n = len(G.A), len(G.B)
    if m < 2 or n < 2 or m * n >= G.p:
        raise HypothesisError(f"need |A|,|B| >= 2 and |A||B| < p; got {m}, {n}, p={G.p}")
    return len(directions_of_grid(G)) == theorem1_bound(m, n)
