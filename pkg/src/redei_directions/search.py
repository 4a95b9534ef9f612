"""Searches that generate instances for the verifiers.

Cliques are found by branch and bound over integer bitsets with a greedy
colouring bound. Grid searches work on normalized grids: the maps
(x, y) -> (s*x + t, u*y + v) preserve the number of directions, so one may
assume 0, 1 in A and 0 in B (and 1 in B when searching for tight grids).
"""

from __future__ import annotations

import enum
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import isqrt

from .directions import Grid, directions_of_grid, inverse_table, theorem1_bound
from .errors import AsymmetricConnectionSet, NotPaley
from .field import PrimeModulus, modulus, subgroup_of_order
from .verifiers import verify_theorem1

EXHAUSTIVE_CEILING = 13


class Status(str, enum.Enum):
    COMPLETE = "Complete"
    LOWER_BOUND_ONLY = "LowerBoundOnly"
    PARTIAL = "Partial"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int | None = None
    time_limit: float | None = None  # seconds
    seed: int = 0


class _BudgetExhausted(Exception):
    pass


class _Meter:
    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.start = time.monotonic()

    def tick(self):
        self.nodes += 1
        b = self.budget
        if b.max_nodes is not None and self.nodes > b.max_nodes:
            raise _BudgetExhausted
        if b.time_limit is not None and self.nodes % 256 == 0:
            if time.monotonic() - self.start > b.time_limit:
                raise _BudgetExhausted


def _p_of(p) -> int:
    return p.p if isinstance(p, PrimeModulus) else modulus(int(p)).p


@dataclass(frozen=True)
class CayleyGraph:
    """Cayley graph on GF(p) joining x, y when x - y lies in the connection set."""

    p: int
    connection: frozenset[int]
    adjacency: tuple[int, ...] = field(repr=False, compare=False)

    @classmethod
    def build(cls, p, S) -> "CayleyGraph":
        q = _p_of(p)
        S = frozenset(int(s) % q for s in S) - {0}
        if any((-s) % q not in S for s in S):
            raise AsymmetricConnectionSet("connection set must satisfy S = -S")
        base = 0
        for s in S:
            base |= 1 << s
        full = (1 << q) - 1
        # row for vertex v is the base row rotated by v
        rows = tuple(((base << v) | (base >> (q - v))) & full for v in range(q))
        return cls(q, S, rows)

    @classmethod
    def paley(cls, p) -> "CayleyGraph":
        q = _p_of(p)
        if q % 4 != 1:
            raise NotPaley(f"Paley graph needs p = 1 mod 4, got {q}")
        return cls.build(q, {x * x % q for x in range(1, q)})

    def is_clique(self, vertices) -> bool:
        vs = list(vertices)
        return all(
            (vs[i] - vs[j]) % self.p in self.connection
            for i in range(len(vs))
            for j in range(i + 1, len(vs))
        )


def _colour_sort(P: int, adj) -> list[tuple[int, int]]:
    """Greedy colouring in ascending vertex order; returns (vertex, colour) by colour."""
    out = []
    uncoloured = P
    colour = 0
    while uncoloured:
        colour += 1
        Q = uncoloured
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q &= ~adj[v] & ~low
            uncoloured &= ~low
            out.append((v, colour))
    return out


def max_clique(graph: CayleyGraph, budget: SearchBudget | None = None, fix_zero: bool = True):
    """Maximum clique by branch and bound.

    Cayley graphs are vertex transitive, so with ``fix_zero`` the search only
    looks at cliques through vertex 0. Returns (size, witness, status, nodes).
    """
    budget = budget or SearchBudget()
    meter = _Meter(budget)
    adj = graph.adjacency
    best: list[int] = []

    def expand(R: list[int], P: int):
        nonlocal best
        meter.tick()
        for v, c in reversed(_colour_sort(P, adj)):
            if len(R) + c <= len(best):
                return
            newP = P & adj[v]
            R.append(v)
            if newP:
                expand(R, newP)
            elif len(R) > len(best):
                best = list(R)
            R.pop()
            P &= ~(1 << v)

    if fix_zero:
        start_R, start_P = [0], adj[0]
    else:
        start_R, start_P = [], (1 << graph.p) - 1
    best = list(start_R) if start_R else []
    status = Status.COMPLETE
    try:
        if start_P:
            expand(start_R, start_P)
    except _BudgetExhausted:
        status = Status.LOWER_BOUND_ONLY
    return len(best), tuple(sorted(best)), status, meter.nodes


@dataclass
class CliqueResult:
    size: int
    witness: tuple[int, ...]
    status: Status
    nodes: int
    bound_holds: bool
    regime: str = "proper"

    def to_dict(self):
        return {
            "size": self.size,
            "witness": list(self.witness),
            "status": self.status.value,
            "nodes": self.nodes,
            "bound_holds": self.bound_holds,
            "regime": self.regime,
        }


def paley_clique_number(p, budget: SearchBudget | None = None) -> CliqueResult:
    """Clique number of the Paley graph, checked against (2w - 1)^2 <= 2p - 1."""
    G = CayleyGraph.paley(p)
    size, witness, status, nodes = max_clique(G, budget)
    return CliqueResult(size, witness, status, nodes, hanson_petridis_ok(size, G.p))


def zd_max_clique(p, d: int, budget: SearchBudget | None = None) -> CliqueResult:
    """Largest A with A - A inside Z_d and 0.

    When -1 is not in Z_d no two-element set qualifies and the result is
    the degenerate size 1. For d = p - 1 every set qualifies; the search
    still runs and the regime is reported as ``full_group``.
    """
    q = _p_of(p)
    Z = subgroup_of_order(q, d)
    if not Z.symmetric:
        return CliqueResult(1, (0,), Status.DEGENERATE, 0, True, "asymmetric")
    G = CayleyGraph.build(q, Z.elements)
    size, witness, status, nodes = max_clique(G, budget)
    regime = "full_group" if d == q - 1 else "proper"
    return CliqueResult(size, witness, status, nodes, size * (size - 1) <= d, regime)


# --- grid searches -----------------------------------------------------------


def normalize_grid(A, B, p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Translate so min(A) = min(B) = 0, then scale A so its smallest nonzero element is 1."""
    A = sorted(int(a) % p for a in A)
    B = sorted(int(b) % p for b in B)
    A = sorted((a - A[0]) % p for a in A)
    B = sorted((b - B[0]) % p for b in B)
    s = inverse_table(p)[A[1]]
    return tuple(sorted(a * s % p for a in A)), tuple(B)


@dataclass
class SweepSummary:
    p: int
    checked: int = 0
    tight: int = 0
    violations: int = 0
    tight_examples: list = field(default_factory=list)
    violating: list = field(default_factory=list)
    mode: str = "exhaustive"

    def to_dict(self):
        return {
            "p": self.p,
            "method": self.mode,
            "checked": self.checked,
            "tight": self.tight,
            "violations": self.violations,
            "tight_examples": [[list(a), list(b)] for a, b in self.tight_examples],
            "violating": [[list(a), list(b)] for a, b in self.violating],
        }


def _sweep_part(p: int, m: int, keep: int) -> SweepSummary:
    out = SweepSummary(p)
    mod = modulus(p)
    for rest in combinations(range(2, p), m - 2):
        A = (0, 1) + rest
        for n in range(2, (p - 1) // m + 1):
            for brest in combinations(range(1, p), n - 1):
                B = (0,) + brest
                count = len(directions_of_grid(Grid(A, B, mod)))
                bound = theorem1_bound(m, n)
                out.checked += 1
                if count < bound:
                    out.violations += 1
                    out.violating.append((A, B))
                elif count == bound:
                    out.tight += 1
                    if len(out.tight_examples) < keep:
                        out.tight_examples.append((A, B))
    return out


def exhaustive_theorem1_sweep(p, ceiling: int = EXHAUSTIVE_CEILING, workers: int = 1, keep: int = 50) -> SweepSummary:
    """Check the grid direction bound on every normalized grid with |A||B| < p.

    Grids are enumerated with 0, 1 in A and 0 in B.
    """
    q = _p_of(p)
    if q > ceiling:
        raise ValueError(f"p = {q} exceeds the exhaustive ceiling {ceiling}; use the randomized mode (--random-trials)")
    sizes = [m for m in range(2, q) if 2 * m < q]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_sweep_part, [q] * len(sizes), sizes, [keep] * len(sizes)))
    else:
        parts = [_sweep_part(q, m, keep) for m in sizes]
    total = SweepSummary(q)
    for part in parts:
        total.checked += part.checked
        total.tight += part.tight
        total.violations += part.violations
        total.violating += part.violating
        total.tight_examples += part.tight_examples[: max(0, keep - len(total.tight_examples))]
    return total


def randomized_theorem1_sweep(p, trials: int, seed: int = 0) -> SweepSummary:
    q = _p_of(p)
    rng = random.Random(seed)
    mod = modulus(q)
    out = SweepSummary(q, mode="randomized")
    pairs = [(m, n) for m in range(2, q) for n in range(2, q) if m * n < q]
    for _ in range(trials):
        m, n = rng.choice(pairs)
        A = tuple(rng.sample(range(q), m))
        B = tuple(rng.sample(range(q), n))
        count = len(directions_of_grid(Grid(A, B, mod)))
        bound = theorem1_bound(m, n)
        out.checked += 1
        if count < bound:
            out.violations += 1
            out.violating.append((A, B))
        elif count == bound:
            out.tight += 1
    return out


@dataclass
class TightSearchResult:
    p: int
    grids: list[Grid]
    status: Status
    nodes: int

    def to_dict(self):
        return {
            "p": self.p,
            "status": self.status.value,
            "nodes": self.nodes,
            "count": len(self.grids),
            "grids": [[list(g.A), list(g.B)] for g in self.grids],
        }


def search_tight_grids(
    p,
    a_sizes: tuple[int, int],
    b_sizes: tuple[int, int],
    budget: SearchBudget | None = None,
) -> TightSearchResult:
    """All normalized grids (0, 1 in A and in B) meeting the bound with equality.

    Sizes are inclusive ranges. A x B' has a subset of the directions of
    A x B for B' inside B, so a partial B whose nonzero finite directions
    already exceed the largest admissible target is pruned.
    """
    q = _p_of(p)
    mod = modulus(q)
    budget = budget or SearchBudget()
    meter = _Meter(budget)
    inv = inverse_table(q)
    found: list[Grid] = []
    status = Status.COMPLETE

    def search_B(A, masks, m, n_lo, n_hi):
        target = {n: theorem1_bound(m, n) - 2 for n in range(n_lo, n_hi + 1)}
        cap = max(target.values())

        def dfs(B, mask, start):
            meter.tick()
            n = len(B)
            if n >= n_lo and mask.bit_count() == target[n]:
                found.append(Grid(tuple(A), tuple(B), mod))
            if n == n_hi:
                return
            for b in range(start, q):
                new = mask
                for c in B:
                    new |= masks[(b - c) % q]
                if new.bit_count() <= cap:
                    B.append(b)
                    dfs(B, new, b + 1)
                    B.pop()

        dfs([0, 1], masks[1], 2)

    try:
        for m in range(max(2, a_sizes[0]), a_sizes[1] + 1):
            n_lo = max(2, b_sizes[0])
            n_hi = min(b_sizes[1], (q - 1) // m)
            if n_hi < n_lo:
                continue
            for rest in combinations(range(2, q), m - 2):
                A = (0, 1) + rest
                ratios = {inv[(x - y) % q] for x in A for y in A if x != y}
                # masks[delta]: nonzero directions delta / (a - a') over A
                masks = [0] * q
                for delta in range(1, q):
                    mk = 0
                    for r in ratios:
                        mk |= 1 << (delta * r % q)
                    masks[delta] = mk
                search_B(A, masks, m, n_lo, n_hi)
    except _BudgetExhausted:
        status = Status.PARTIAL

    for g in found:
        rep = verify_theorem1(g)
        if not rep.tight:  # pragma: no cover - would be a bug in the pruned search
            raise AssertionError(f"search emitted a non-tight grid {g}")
    return TightSearchResult(q, found, status, meter.nodes)


def hanson_petridis_ok(omega: int, p: int) -> bool:
    """omega <= (1 + sqrt(2p - 1)) / 2 in integer form."""
    return 2 * omega - 1 <= isqrt(2 * p - 1)
