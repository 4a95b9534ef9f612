import random
from itertools import combinations

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from conftest import random_pointset
from redei_directions.directions import Grid, PointSet, directions_of_pointset
from redei_directions.errors import RangeError, SizeError
from redei_directions.field import modulus
from redei_directions.poly import DensePolynomial
from redei_directions.redei import (
    HFlag,
    RootMultiset,
    build_f_at_y,
    coefficient_profile,
    complement_sigmas,
    elementary_symmetric,
    h_values,
    lacunarity_lower_bound,
    lemma_divisibility_check,
    product_check,
    product_check_all,
    redei_H_at_y,
    roots_at_y,
    x_p_minus_x,
)

P = DensePolynomial.from_ints
SQUARE5 = Grid.of([0, 1], [0, 1], 5).expand()


def multiset(values, p):
    counts = [0] * p
    for v in values:
        counts[v % p] += 1
    return RootMultiset(tuple(counts), modulus(p))


def sympy_h_table(U: PointSet) -> list[list[int]]:
    """h_i(y) from H * (x^p quo H) computed in GF(p)[x, y] by sympy.

    Independent of the engine: f is the polynomial part of x^p / H, which
    agrees with the recursive definition whenever |U| >= 2.
    """
    x, y = sp.symbols("x y")
    p = U.p
    H = sp.Poly(sp.prod([x + a * y - b for a, b in U.points]), x, y, modulus=p)
    f, _ = sp.div(sp.Poly(x**p, x, y, modulus=p), H)
    prod = H * f
    coeffs = {}
    for (ex, ey), c in prod.terms():
        coeffs.setdefault(p - ex, {})[ey] = int(c) % p
    return [[sum(c * pow(yy, e, p) for e, c in coeffs.get(i, {}).items()) % p for i in range(p + 1)] for yy in range(p)]


# --- roots and sigmas ----------------------------------------------------------


def test_roots_examples():
    assert roots_at_y(SQUARE5, 0).elements() == [0, 0, 1, 1]
    assert roots_at_y(PointSet.of([(0, 0), (1, 1)], 5), 1).elements() == [0, 0]


@pytest.mark.parametrize("p", [5, 7])
def test_distinct_roots_iff_not_direction(p):
    rng = random.Random(p)
    for _ in range(100):
        U = random_pointset(rng, p)
        D = directions_of_pointset(U)
        for y in range(p):
            assert roots_at_y(U, y).distinct == (y not in D)


def test_sigma_examples():
    st_ = elementary_symmetric(multiset([1, 2], 5))
    assert st_.sigma == (1, 3, 2)
    assert elementary_symmetric(multiset([], 5)).sigma == (1,)


@given(st.sampled_from([5, 7, 11, 13]), st.lists(st.integers(0, 100), max_size=12))
@settings(max_examples=100, deadline=None)
def test_sigma_matches_expanded_product(p, values):
    sig = elementary_symmetric(multiset(values, p)).sigma
    poly = DensePolynomial.from_roots([v % p for v in values], p)
    n = len(values)
    for k in range(n + 1):
        assert poly.coeff(n - k) == (-1) ** k * sig[k] % p


def test_complement_sigma_examples():
    tau = complement_sigmas(elementary_symmetric(multiset([1, 2], 5)), 3).sigma
    assert tau[1] == 2  # -sigma_1 = -3
    assert tau[2] == 2  # sigma_1^2 - sigma_2 = 7
    assert tau == (1, 2, 2, 0)  # complement {0, 3, 4}
    with pytest.raises(RangeError):
        complement_sigmas(elementary_symmetric(multiset([1, 2], 5)), 4)


@pytest.mark.parametrize("p", [5, 7])
def test_complement_sigma_explicit_oracle(p):
    for r in range(0, p + 1):
        for A in combinations(range(p), r):
            comp = [c for c in range(p) if c not in A]
            poly = DensePolynomial.from_roots(comp, p)
            tau = complement_sigmas(elementary_symmetric(multiset(A, p)), p - r).sigma
            m = len(comp)
            assert all(poly.coeff(m - k) == (-1) ** k * tau[k] % p for k in range(m + 1))


# --- f, H and the product identity ---------------------------------------------


def test_f_examples():
    U = PointSet.of([(0, 1), (0, 2)], 5)  # A_y = {1, 2} for every y
    assert build_f_at_y(U, 3) == P([0, 2, 3, 1], 5)
    U4 = PointSet.of([(0, 0), (0, 1), (0, 2), (0, 3)], 5)
    assert build_f_at_y(U4, 0) == P([-4, 1], 5)  # x - 4
    with pytest.raises(SizeError):
        build_f_at_y(Grid.of([0, 1, 2], [0, 1], 5).expand(), 0)


def test_H_examples():
    H = redei_H_at_y(SQUARE5, 0)
    assert H == P([0, 0, 1, 3, 1], 5)  # x^2 (x - 1)^2
    assert H == DensePolynomial.from_roots([0, 1], 5) * DensePolynomial.from_roots([0, 1], 5)
    assert redei_H_at_y(PointSet.of([(2, 3)], 7), 4) == P([2 * 4 - 3, 1], 7)


def test_H_pointwise_oracle():
    rng = random.Random(1)
    for _ in range(40):
        p = rng.choice([5, 7, 11, 13])
        U = random_pointset(rng, p, 1, 6)
        y0 = rng.randrange(p)
        H = redei_H_at_y(U, y0)
        for t in range(p):
            direct = 1
            for a, b in U.points:
                direct = direct * (t + a * y0 - b) % p
            assert H(t) == direct


def test_product_check_examples():
    assert product_check(SQUARE5, 2) is True
    assert product_check(SQUARE5, 1) is False


def test_product_check_false_on_repeated_roots():
    rng = random.Random(2)
    for _ in range(50):
        U = random_pointset(rng, 7)
        for y in range(7):
            if not roots_at_y(U, y).distinct:
                assert not product_check(U, y)


def test_f_is_monic_of_degree_p_minus_n():
    rng = random.Random(3)
    for _ in range(60):
        p = rng.choice([5, 7, 11, 13, 17])
        U = random_pointset(rng, p, 1)
        f = build_f_at_y(U, rng.randrange(p))
        assert f.degree == p - len(U) and f.lead == 1


def test_single_point_identity():
    # |U| = 1 uses sigma_{p-1}(GF(p)) = -1 in the recursion
    for p in (5, 7):
        for a in range(p):
            for b in range(p):
                U = PointSet.of([(a, b)], p)
                assert all(product_check(U, y) for y in range(p))


def test_x_p_minus_x():
    assert x_p_minus_x(5) == P([0, 4, 0, 0, 0, 1], 5)


# --- coefficient profile -------------------------------------------------------


def test_profile_square_grid_p5():
    cp = coefficient_profile(SQUARE5)
    # h_1 vanishes, h_2 = 2(y^2 + 1) does not
    assert cp.flag(1) is HFlag.IDENTICALLY_ZERO
    assert cp.flag(2) is HFlag.NONZERO
    assert cp.first_nonzero_index == 2
    assert lacunarity_lower_bound(cp) == 4 == len(directions_of_pointset(SQUARE5))
    table = h_values(SQUARE5)
    assert [row[2] for row in table] == [(2 * y * y + 2) % 5 for y in range(5)]


@pytest.mark.parametrize(
    "pts, p",
    [
        ([(0, 0), (0, 1), (1, 0), (1, 1)], 5),
        ([(0, 0), (1, 2), (3, 1)], 7),
        ([(0, 0), (0, 1), (2, 5), (3, 3), (4, 4)], 11),
        ([(1, 2), (3, 4), (5, 6), (0, 7), (2, 2), (9, 1)], 13),
    ],
)
def test_h_table_matches_sympy(pts, p):
    U = PointSet.of(pts, p)
    assert h_values(U) == sympy_h_table(U)


def test_batched_matches_scalar():
    rng = random.Random(4)
    for _ in range(40):
        p = rng.choice([5, 7, 11, 13, 17, 19, 23])
        U = random_pointset(rng, p, 1)
        assert h_values(U, batched=True) == h_values(U, batched=False)
        assert product_check_all(U) == [product_check(U, y) for y in range(p)]


def test_h_p_minus_1_not_identically_zero():
    rng = random.Random(5)
    for _ in range(60):
        p = rng.choice([5, 7, 11, 13])
        U = random_pointset(rng, p)
        if all(y in directions_of_pointset(U) for y in range(p)):
            continue
        assert coefficient_profile(U).flag(p - 1) is HFlag.NONZERO


def test_profile_horizontal_line():
    U = PointSet.of([(a, 3) for a in range(5)], 7)
    cp = coefficient_profile(U)
    assert cp.collinear
    assert all(cp.flag(i) is HFlag.IDENTICALLY_ZERO for i in range(1, 6))
    assert lacunarity_lower_bound(cp) == 1 == len(directions_of_pointset(U))


def test_profile_uses_vertical_coordinatization():
    # no two points share a first coordinate: the engine re-coordinatizes
    U = PointSet.of([(0, 0), (1, 2), (2, 1), (3, 5)], 11)
    cp = coefficient_profile(U)
    assert cp.shear == directions_of_pointset(U).finite()[0]
    assert lacunarity_lower_bound(cp) <= len(directions_of_pointset(U))


def test_profile_size_error():
    with pytest.raises(SizeError):
        coefficient_profile(Grid.of([0, 1, 2], [0, 1], 5).expand())


@given(st.sampled_from([5, 7, 11, 13]), st.integers(0, 10**6), st.integers(0, 12), st.integers(0, 12))
@settings(max_examples=60, deadline=None)
def test_translation_invariance(p, seed, s, t):
    U = random_pointset(random.Random(seed), p)
    V = U.translate(s, t)
    assert coefficient_profile(U).first_nonzero_index == coefficient_profile(V).first_nonzero_index
    assert len(directions_of_pointset(U)) == len(directions_of_pointset(V))


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_lacunarity_bound_valid(p):
    rng = random.Random(p)
    for _ in range(80):
        U = random_pointset(rng, p)
        assert lacunarity_lower_bound(coefficient_profile(U)) <= len(directions_of_pointset(U))


def test_lacunarity_grid_bound_dominates_theorem1_on_tight_grid():
    U = Grid.of([0, 1, 5, 9, 10], [0, 1, 5, 9, 10], 41).expand()
    bound = lacunarity_lower_bound(coefficient_profile(U))
    assert 25 - 5 + 2 <= bound <= 22


# --- lemma checker ---------------------------------------------------------------


def test_lemma_smallest_case():
    rep = lemma_divisibility_check(P([1, 1], 5), P([1], 5), 1)
    assert rep.hypotheses_ok and not rep.divisible
    assert rep.residue == P([0, 1], 5)


def test_lemma_reports_repeated_root():
    R = P([1, -1], 5) * P([1, -1], 5)
    rep = lemma_divisibility_check(R, P([1], 5), 1)
    assert not rep.hypotheses["R_coprime_to_derivative"]
    assert "R_coprime_to_derivative" in rep.failed()


def test_lemma_reports_each_hypothesis():
    rep = lemma_divisibility_check(P([2, 1], 7), P([1, 1], 7), 7)
    assert rep.failed() == ["R_constant_term_1", "p_does_not_divide_m"]
    rep = lemma_divisibility_check(P([1], 7), P([1], 7), 1)
    assert not rep.hypotheses["deg_R_at_least_1"]


def test_lemma_divisible_when_p_divides_m():
    # (1 + x)^p = 1 + x^p, so x^2 divides R^p - 1
    rep = lemma_divisibility_check(P([1, 1], 5), P([1], 5), 5)
    assert rep.failed() == ["p_does_not_divide_m"]
    assert rep.divisible and not rep.counterexample
