"""Acceptance criteria, one test per criterion, each with its time limit.

Every test records a PASS/FAIL line that is printed in the terminal summary.
"""

import random
import time
from contextlib import contextmanager
from itertools import combinations

import pytest

from conftest import MID_PRIMES, SMALL_PRIMES
from redei_directions.directions import (
    INF,
    Grid,
    PointSet,
    directions_of_grid,
    directions_of_pointset,
    theorem1_bound,
)
from redei_directions.field import is_prime, modulus
from redei_directions.poly import DensePolynomial, poly_derivative, poly_gcd
from redei_directions.redei import (
    RootMultiset,
    coefficient_profile,
    complement_sigmas,
    elementary_symmetric,
    lacunarity_lower_bound,
    lemma_divisibility_check,
    product_check_all,
)
from redei_directions.search import (
    CayleyGraph,
    Status,
    exhaustive_theorem1_sweep,
    paley_clique_number,
)
from redei_directions.verifiers import (
    verify_cor2,
    verify_cor3,
    verify_cor4,
    verify_cor5,
    verify_remark,
    verify_theorem1,
)

pytestmark = pytest.mark.acceptance

PALEY41 = (0, 1, 5, 9, 10)
_cliques: dict[int, tuple[int, ...]] = {}


@contextmanager
def criterion(record, number, text, limit):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        ok = ok and elapsed < limit
        record(number, f"{text} (limit {limit:g}s)", ok, elapsed)
    assert elapsed < limit, f"criterion {number} took {elapsed:.1f}s, limit {limit}s"


def next_prime(n):
    while not is_prime(n):
        n += 1
    return n


def test_criterion_01_paley41_grid(record_criterion):
    with criterion(record_criterion, 1, "p=41 tight grid, 22 directions = QR u {0, inf}", 1):
        D = directions_of_grid(Grid.of(PALEY41, PALEY41, 41))
        qr = {x * x % 41 for x in range(1, 41)}
        assert len(D) == 22 and set(D) == qr | {0, INF}
        assert verify_theorem1(Grid.of(PALEY41, PALEY41, 41)).tight


def test_criterion_02_long_rectangles(record_criterion):
    with criterion(record_criterion, 2, "long rectangles 2n and 3n-1", 1):
        for n in range(2, 11):
            p = next_prime(2 * n + 1)
            assert len(directions_of_grid(Grid.of([0, 1], range(n), p))) == 2 * n
        for n in (3, 5, 7, 9):
            p = next_prime(3 * n + 1)
            assert len(directions_of_grid(Grid.of([0, 1, 2], range(n), p))) == 3 * n - 1


def test_criterion_03_exhaustive_sweep(record_criterion):
    with criterion(record_criterion, 3, "exhaustive grid sweep p in {5,7,11,13}, zero violations", 300):
        for p in SMALL_PRIMES:
            s = exhaustive_theorem1_sweep(p)
            assert s.checked > 0 and s.violations == 0


def _containing_origin(p, k):
    cells = [(c // p, c % p) for c in range(1, p * p)]
    for rest in combinations(cells, k - 1):
        yield PointSet.of(((0, 0),) + rest, p)


def _all_of_size(p, k):
    cells = [(c // p, c % p) for c in range(p * p)]
    for pts in combinations(cells, k):
        yield PointSet.of(pts, p)


def _random_sets(rng, p, count):
    for _ in range(count):
        k = rng.randint(1, p - 1)
        yield PointSet.of(((c // p, c % p) for c in rng.sample(range(p * p), k)), p)


def product_corpus():
    """Point sets for the product identity and lacunarity checks.

    Directions and the h-profile are translation invariant, so sets
    containing the origin stand in for all their translates.
    """
    rng = random.Random(2024)
    plan = {5: [(1, "all"), (2, "all"), (3, "all"), (4, "all")],
            7: [(1, "all"), (2, "all"), (3, "all"), (4, "origin")],
            11: [(1, "all"), (2, "all"), (3, "origin")],
            13: [(1, "all"), (2, "all"), (3, "origin")]}
    for p, parts in plan.items():
        for k, how in parts:
            yield from (_all_of_size if how == "all" else _containing_origin)(p, k)
        yield from _random_sets(rng, p, 200)
    for p in MID_PRIMES:
        yield from _random_sets(rng, p, 200)


def test_criterion_04_06_product_identity_and_lacunarity(record_criterion):
    checked = 0
    with criterion(record_criterion, 4, "product identity iff y not a direction", 300):
        bad_identity, bad_bound = [], []
        for U in product_corpus():
            p = U.p
            D = directions_of_pointset(U) if len(U) >= 2 else None
            finite = set(D.finite()) if D is not None else set()
            if product_check_all(U) != [y not in finite for y in range(p)]:
                bad_identity.append(U)
            if D is not None and lacunarity_lower_bound(coefficient_profile(U)) > len(D):
                bad_bound.append(U)
            checked += 1
        assert not bad_identity, bad_identity[:3]
    record_criterion(6, f"lacunarity bound <= |D| on the same {checked} sets (bundled)", not bad_bound, 0.0)
    assert not bad_bound, bad_bound[:3]


def test_criterion_05_complement_sigmas(record_criterion):
    with criterion(record_criterion, 5, "complement sigmas match explicit complements, p <= 13", 60):
        for p in (3, 5, 7, 11, 13):
            mod = modulus(p)
            for mask in range(1 << p):
                A = [c for c in range(p) if mask >> c & 1]
                comp = [c for c in range(p) if not mask >> c & 1]
                counts = tuple((mask >> c) & 1 for c in range(p))
                tau = complement_sigmas(elementary_symmetric(RootMultiset(counts, mod)), p - len(A)).sigma
                assert tau == elementary_symmetric(RootMultiset(tuple(1 - c for c in counts), mod)).sigma[: len(tau)]
                poly = DensePolynomial.from_roots(comp, p)
                m = len(comp)
                assert all(poly.coeff(m - k) == (-1) ** k * tau[k] % p for k in range(m + 1))


def _brute_force_omega(p):
    qr = {x * x % p for x in range(1, p)}
    best = 1
    for k in range(2, p + 1):
        if not any(all((a - b) % p in qr for a, b in combinations(S, 2)) for S in combinations(range(p), k)):
            break
        best = k
    return best


def test_criterion_07_paley_cliques(record_criterion):
    with criterion(record_criterion, 7, "Paley clique numbers vs enumeration and Hanson-Petridis", 120):
        for p in (5, 13, 17):
            res = paley_clique_number(p)
            assert res.status is Status.COMPLETE and res.size == _brute_force_omega(p)
            _cliques[p] = res.witness
        for p in (29, 37, 41, 53, 61):
            res = paley_clique_number(p)
            assert res.status is Status.COMPLETE
            assert res.size * (res.size - 1) <= (p - 1) // 2
            assert CayleyGraph.paley(p).is_clique(res.witness)
            _cliques[p] = res.witness
        assert len(_cliques[41]) == 5


def _disjoint_pairs(C):
    for k in range(2, len(C) - 1):
        for A in combinations(C, k):
            rest = [c for c in C if c not in A]
            for j in range(2, len(rest) + 1):
                for B in combinations(rest, j):
                    yield A, B


def test_criterion_08_corollaries(record_criterion):
    with criterion(record_criterion, 8, "Cor 5 exhaustive, Cor 2 tight, Cor 3 random, Cor 4 on clique splits", 300):
        for p in (3, 5, 7, 11, 13):
            for r in range(1, p + 1):
                for A in combinations(range(p), r):
                    assert verify_cor5(A, p).satisfied
        rep = verify_cor2(PALEY41, 20, 41)
        assert rep.hypothesis_ok and rep.tight

        rng = random.Random(8)
        for p in [q for q in range(11, 102) if is_prime(q)]:
            for _ in range(100):
                k = rng.randint(2, max(2, int((p - 1) ** 0.5)))
                while k * k >= p:
                    k -= 1
                rep = verify_cor3(rng.sample(range(p), k), p)
                assert rep.hypothesis_ok and rep.satisfied

        cliques = _cliques or {p: paley_clique_number(p).witness for p in (29, 37, 41, 53, 61)}
        splits = 0
        for p, C in cliques.items():
            for A, B in _disjoint_pairs(C):
                rep = verify_cor4(A, B, p)
                assert rep.hypothesis_ok and rep.satisfied, (p, A, B)
                if rep.details["intermediate_bound"] is not None:
                    assert rep.details["intermediate_satisfied"]
                splits += 1
        assert splits > 0


def _random_poly(rng, p, deg, const_one=True):
    coeffs = [1 if const_one else rng.randrange(p)] + [rng.randrange(p) for _ in range(deg)]
    coeffs[-1] = coeffs[-1] or 1
    return DensePolynomial.from_ints(coeffs, p)


def test_criterion_09_lemma(record_criterion):
    with criterion(record_criterion, 9, "lemma: 500 valid (R, S, m), zero divisible cases", 60):
        rng = random.Random(9)
        found = 0
        while found < 500:
            p = rng.choice(SMALL_PRIMES)
            R = _random_poly(rng, p, rng.randint(1, 5))
            S = _random_poly(rng, p, rng.randint(0, 5))
            m = rng.randint(1, 3 * p)
            rep = lemma_divisibility_check(R, S, m)
            if not rep.hypotheses_ok:
                continue
            assert poly_gcd(R, poly_derivative(R)).degree == 0
            assert not rep.divisible, (R, S, m)
            found += 1


def test_criterion_10_constructions(record_criterion):
    with criterion(record_criterion, 10, "constructions i/ii/I/II meet n^2-n+1 and n^2-n", 120):
        cases = []
        for p in (5, 7, 11, 13):
            for n in (2, 3):
                if n * n < p:
                    cases += [(p, A) for A in combinations(range(p), n)]
        rng = random.Random(10)
        for _ in range(50):
            n = rng.randint(4, 7)
            p = next_prime(n * n + 1 + rng.randrange(200))
            cases.append((p, tuple(rng.sample(range(1, p), n))))
        for p, A in cases:
            kinds = ("i", "I", "ii", "II") if 0 not in A else ("i", "I")
            for kind in kinds:
                rep = verify_remark(kind, A, p)
                assert rep.hypothesis_ok and rep.satisfied, (kind, p, A)
