"""Checkable forms of the direction bound for grids and its corollaries.

Every verifier separates hypothesis checking from the bound itself. A failed
hypothesis yields a report with ``hypothesis_ok == False`` and no bound
evaluated; it never raises. Bounds are compared in integer arithmetic.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Any, Iterable

from .directions import (
    Grid,
    PointSet,
    difference_set,
    directions_of_grid,
    directions_of_pointset,
    inverse_table,
    theorem1_bound,
)
from .errors import HypothesisError
from .field import legendre, subgroup_of_order

LOWER = "measured >= claimed"
UPPER = "measured <= claimed"


@dataclass
class BoundReport:
    statement: str
    hypotheses: dict[str, bool]
    comparison: str
    claimed_bound: int | None = None
    measured: int | None = None
    satisfied: bool | None = None
    tight: bool | None = None
    witness: Any = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def hypothesis_ok(self) -> bool:
        return all(self.hypotheses.values())

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["hypothesis_ok"] = self.hypothesis_ok
        return d


def _evaluate(report: BoundReport, claimed: int, measured: int) -> BoundReport:
    report.claimed_bound = claimed
    report.measured = measured
    if report.comparison == LOWER:
        report.satisfied = measured >= claimed
    else:
        report.satisfied = measured <= claimed
    report.tight = measured == claimed
    return report


def _residues(values: Iterable[int], p: int) -> list[int]:
    out = [int(v) % p for v in values]
    if len(set(out)) != len(out):
        raise HypothesisError(f"repeated elements mod {p}: {sorted(values)}")
    return out


def verify_theorem1(G: Grid) -> BoundReport:
    m, n = len(G.A), len(G.B)
    rep = BoundReport(
        "theorem1",
        {"A_at_least_two": m >= 2, "B_at_least_two": n >= 2, "AB_less_than_p": m * n < G.p},
        LOWER,
    )
    if not rep.hypothesis_ok:
        return rep
    D = directions_of_grid(G)
    rep.witness = {"directions": D.slots()}
    return _evaluate(rep, theorem1_bound(m, n), len(D))


def verify_cor2(A: Iterable[int], d: int, p: int) -> BoundReport:
    """|A|(|A|-1) <= d whenever A - A lies in Z_d together with 0.

    The full group d = p - 1 is flagged as a hypothesis failure: there every
    set qualifies and the inequality is false for |A| = p.
    """
    A = _residues(A, p)
    divides = d > 1 and (p - 1) % d == 0
    hyp = {"d_divides_p_minus_1": divides, "proper_subgroup": d < p - 1}
    if divides:
        Z = subgroup_of_order(p, d).elements
        diffs = difference_set(A, p) - {0}
        hyp["differences_in_Zd"] = diffs <= Z
    else:
        hyp["differences_in_Zd"] = False
    rep = BoundReport("cor2", hyp, UPPER)
    if not rep.hypothesis_ok:
        return rep
    k = len(A)
    return _evaluate(rep, d, k * (k - 1))


def sumset_size(x: int, A: Iterable[int], y: int, B: Iterable[int], p: int) -> int:
    """|xA + yB| in GF(p)."""
    xa = {x * a % p for a in A}
    yb = {y * b % p for b in B}
    return len({(s + t) % p for s in xa for t in yb})


def verify_cor3(A: Iterable[int], p: int) -> BoundReport:
    A = _residues(A, p)
    k = len(A)
    rep = BoundReport("cor3", {"at_least_two": k >= 2, "A_squared_less_than_p": k * k < p}, LOWER)
    if not rep.hypothesis_ok:
        return rep
    inv = inverse_table(p)
    # |(a-b)A + (c-d)A| depends only on the ratio (c-d)/(a-b)
    best, witness, seen = -1, None, set()
    for a, b, c, d in product(A, repeat=4):
        if a == b or c == d:
            continue
        lam = (c - d) * inv[(a - b) % p] % p
        if lam in seen:
            continue
        seen.add(lam)
        size = sumset_size(1, A, lam, A, p)
        if size > best:
            best, witness = size, (a, b, c, d)
    claimed = -(-(k**3) // (2 * k - 1))
    rep.witness = {"quadruple": witness}
    rep = _evaluate(rep, claimed, best)
    # cross-multiplied form of measured >= k^3 / (2k - 1)
    rep.satisfied = best * (2 * k - 1) >= k**3
    return rep


def _uniform_character(diffs: set[int], p: int) -> bool:
    """All nonzero elements are squares, or all are non-squares."""
    chars = {legendre(x, p) for x in diffs if x % p}
    return len(chars) <= 1


def union_of_squares(A: Iterable[int], B: Iterable[int], p: int) -> PointSet:
    A, B = list(A), list(B)
    pts = [(a, a2) for a in A for a2 in A] + [(b, b2) for b in B for b2 in B]
    return PointSet.of(pts, p)


def verify_cor4(A: Iterable[int], B: Iterable[int], p: int) -> BoundReport:
    """Upper bound (p+3)/2 for two disjoint sets with uniform difference characters.

    Also measures the directions of A x A together with B x B and checks the
    intermediate lower bound n^2 + mn - 2n + 2 (m >= n the two sizes), which
    needs m^2 + n^2 < p. ``satisfied`` requires both checks to pass.
    """
    A, B = _residues(A, p), _residues(B, p)
    sA, sB = set(A), set(B)
    hyp = {
        "disjoint": not (sA & sB),
        "A_at_least_two": len(A) >= 2,
        "B_at_least_two": len(B) >= 2,
        "A_minus_A_uniform": _uniform_character(difference_set(A, p), p),
        "A_minus_B_uniform": _uniform_character({(a - b) % p for a in A for b in B}, p),
        "B_minus_B_uniform": _uniform_character(difference_set(B, p), p),
    }
    rep = BoundReport("cor4", hyp, UPPER)
    if not rep.hypothesis_ok:
        return rep
    a, b = len(A), len(B)
    measured = min(a * a - 2 * a, b * b - 2 * b) + a * b + 2
    _evaluate(rep, (p + 3) // 2, measured)

    m, n = max(a, b), min(a, b)
    U = union_of_squares(A, B, p)
    D = directions_of_pointset(U)
    qr = {x * x % p for x in range(1, p)}
    rep.details["union_directions"] = len(D)
    rep.details["union_directions_in_squares"] = all(d == 0 or d in qr for d in D.finite())
    if m * m + n * n < p:
        inter = n * n + m * n - 2 * n + 2
        rep.details["intermediate_bound"] = inter
        rep.details["intermediate_satisfied"] = len(D) >= inter
        rep.satisfied = rep.satisfied and len(D) >= inter
    else:
        rep.details["intermediate_bound"] = None
    return rep


def verify_cor5(A: Iterable[int], p: int) -> BoundReport:
    A = _residues(A, p)
    rep = BoundReport("cor5", {"nonempty": len(A) >= 1}, LOWER)
    if not rep.hypothesis_ok:
        return rep
    return _evaluate(rep, min(p, 2 * len(A) - 1), len(difference_set(A, p)))


def _check_remark_input(vals: list[int], p: int, nonzero: bool):
    n = len(vals)
    if n < 2:
        raise HypothesisError("need at least two elements")
    if n * n >= p:
        raise HypothesisError(f"need n^2 < p, got n = {n}, p = {p}")
    if nonzero and 0 in vals:
        raise HypothesisError("0 must not be in B")


def remark_pointset_i(A: Iterable[int], p: int) -> PointSet:
    """{(a_i + a_j^2, a_j)}: n horizontal lines with n points each."""
    A = _residues(A, p)
    _check_remark_input(A, p, nonzero=False)
    return PointSet.of(((ai + aj * aj, aj) for aj in A for ai in A), p)


def remark_pointset_ii(B: Iterable[int], p: int) -> PointSet:
    """{(b_i + b_j^-1, b_j)} for B not containing 0."""
    B = _residues(B, p)
    _check_remark_input(B, p, nonzero=True)
    inv = inverse_table(p)
    return PointSet.of(((bi + inv[bj], bj) for bj in B for bi in B), p)


def remark_quotient_set_I(A: Iterable[int], p: int) -> set[int]:
    """{(x-y)/(z-w) + (z+w) : z != w}."""
    A = _residues(A, p)
    _check_remark_input(A, p, nonzero=False)
    inv = inverse_table(p)
    diffs = difference_set(A, p)
    out = set()
    for z, w in product(A, repeat=2):
        if z == w:
            continue
        iz, s = inv[(z - w) % p], z + w
        out.update((t * iz + s) % p for t in diffs)
    return out


def remark_quotient_set_II(B: Iterable[int], p: int) -> set[int]:
    """{(x-y)/(z-w) - (zw)^-1 : z != w}."""
    B = _residues(B, p)
    _check_remark_input(B, p, nonzero=True)
    inv = inverse_table(p)
    diffs = difference_set(B, p)
    out = set()
    for z, w in product(B, repeat=2):
        if z == w:
            continue
        iz, s = inv[(z - w) % p], inv[z * w % p]
        out.update((t * iz - s) % p for t in diffs)
    return out


_REMARKS = {
    "i": (remark_pointset_i, False),
    "ii": (remark_pointset_ii, True),
    "I": (remark_quotient_set_I, False),
    "II": (remark_quotient_set_II, True),
}


def verify_remark(kind: str, values: Iterable[int], p: int) -> BoundReport:
    """Check one of the non-grid constructions.

    Point sets ``i``/``ii`` must determine at least n^2 - n + 1 directions,
    value sets ``I``/``II`` must have at least n^2 - n elements.
    """
    build, nonzero = _REMARKS[kind]
    vals = [int(v) % p for v in values]
    n = len(vals)
    hyp = {
        "distinct": len(set(vals)) == n,
        "at_least_two": n >= 2,
        "n_squared_less_than_p": n * n < p,
    }
    if nonzero:
        hyp["zero_excluded"] = 0 not in vals
    rep = BoundReport(f"remark_{kind}", hyp, LOWER)
    if not rep.hypothesis_ok:
        return rep
    built = build(vals, p)
    if kind in ("i", "ii"):
        measured, claimed = len(directions_of_pointset(built)), n * n - n + 1
        rep.details["points"] = len(built)
    else:
        measured, claimed = len(built), n * n - n
    return _evaluate(rep, claimed, measured)

