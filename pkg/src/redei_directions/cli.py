"""Command line front end.

Exit codes: 0 success, 1 a checked statement was violated, 2 input error,
3 hypotheses of the selected statement do not hold.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from . import redei, search, verifiers
from .directions import Grid, directions_of_grid, directions_of_pointset
from .errors import NotPrimeError, ReDirError
from .field import modulus
from .poly import DensePolynomial

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_HYPOTHESIS = 0, 1, 2, 3


class InstanceError(Exception):
    def __init__(self, msg: str, line: int | None = None, column: int | None = None, source: str = "instance"):
        self.line, self.column, self.source = line, column, source
        where = source
        if line is not None:
            where += f", line {line}"
        if column is not None:
            where += f", column {column}"
        super().__init__(f"{where}: {msg}")


@dataclass(frozen=True)
class Instance:
    p: int
    A: tuple[int, ...] | None = None
    B: tuple[int, ...] | None = None

    def to_text(self) -> str:
        lines = [f"p = {self.p}"]
        for key in ("A", "B"):
            vals = getattr(self, key)
            if vals is not None:
                lines.append(f"{key} = {','.join(map(str, vals))}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"p": self.p}
        for key in ("A", "B"):
            vals = getattr(self, key)
            if vals is not None:
                d[key] = list(vals)
        return d


def _parse_int(text: str, line, column, source) -> int:
    t = text.strip()
    if not t or not (t.lstrip("+-").isdigit()):
        raise InstanceError(f"expected a decimal integer, got {text.strip()!r}", line, column, source)
    return int(t)


def _parse_set(text: str, p: int | None, line, col0: int, source: str, warn) -> tuple[int, ...]:
    vals: list[int] = []
    col = col0
    for piece in text.split(","):
        lead = len(piece) - len(piece.lstrip())
        v = _parse_int(piece, line, col + lead, source)
        vals.append(v)
        col += len(piece) + 1
    if p is not None:
        reduced = []
        for v in vals:
            if not 0 <= v < p:
                warn(f"{source}: residue {v} reduced mod {p} to {v % p}")
            reduced.append(v % p)
        vals = reduced
    if len(set(vals)) != len(vals):
        raise InstanceError("duplicate elements", line, col0, source)
    return tuple(vals)


def parse_instance(text: str, source: str = "instance", warn=None) -> Instance:
    """Parse ``key = value`` lines with keys p, A, B; '#' starts a comment."""
    warn = warn or (lambda msg: print(f"warning: {msg}", file=sys.stderr))
    raw: dict[str, tuple[str, int, int]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        if "=" not in body:
            raise InstanceError("expected 'key = value'", lineno, 1, source)
        key, value = body.split("=", 1)
        k = key.strip()
        if k not in ("p", "A", "B"):
            raise InstanceError(f"unknown key {k!r}", lineno, len(key) - len(key.lstrip()) + 1, source)
        if k in raw:
            raise InstanceError(f"duplicate key {k!r}", lineno, 1, source)
        raw[k] = (value, lineno, len(key) + 2)
    if "p" not in raw:
        raise InstanceError("missing p", source=source)
    value, ln, col = raw["p"]
    p = _parse_int(value, ln, col, source)
    try:
        modulus(p)
    except NotPrimeError as e:
        raise InstanceError(str(e), ln, col, source) from None
    sets = {}
    for k in ("A", "B"):
        if k in raw:
            value, ln, col = raw[k]
            sets[k] = _parse_set(value, p, ln, col, source, warn)
    return Instance(p, sets.get("A"), sets.get("B"))


def load_instance(args) -> Instance:
    """Instance from the optional file, overridden key by key by --p/--A/--B."""
    warn = lambda msg: print(f"warning: {msg}", file=sys.stderr)  # noqa: E731
    p = A = B = None
    if getattr(args, "instance", None):
        path = Path(args.instance)
        try:
            text = path.read_text()
        except OSError as e:
            raise InstanceError(f"cannot read: {e.strerror}", source=str(path)) from None
        base = parse_instance(text, str(path), warn)
        p, A, B = base.p, base.A, base.B
    if getattr(args, "inline_p", None) is not None:
        p = _parse_int(args.inline_p, None, 1, "--p")
        try:
            modulus(p)
        except NotPrimeError as e:
            raise InstanceError(str(e), None, 1, "--p") from None
    if p is None:
        raise InstanceError("no p given (instance file or --p)")
    if getattr(args, "inline_A", None) is not None:
        A = _parse_set(args.inline_A, p, None, 1, "--A", warn)
    if getattr(args, "inline_B", None) is not None:
        B = _parse_set(args.inline_B, p, None, 1, "--B", warn)
    return Instance(p, A, B)


def _need(inst: Instance, *keys: str):
    for k in keys:
        if getattr(inst, k) is None:
            raise InstanceError(f"this command needs {k}")


# --- commands ----------------------------------------------------------------


def cmd_directions(args) -> tuple[dict, int]:
    inst = load_instance(args)
    _need(inst, "A", "B")
    G = Grid.of(inst.A, inst.B, inst.p)
    if args.points:
        D = directions_of_pointset(G.expand())
        method = "points"
    else:
        D = directions_of_grid(G)
        method = "grid"
    doc = {"instance": inst.to_dict(), "method": method, "count": len(D)}
    if args.list:
        doc["directions"] = D.slots()
        doc["directions_text"] = D.render()
    return doc, EXIT_OK


def _report_exit(reports) -> int:
    if any(not r.hypothesis_ok for r in reports):
        return EXIT_HYPOTHESIS
    if any(r.satisfied is False for r in reports):
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    inst = load_instance(args)
    p = inst.p
    reports = []
    if args.theorem1:
        _need(inst, "A", "B")
        reports.append(verifiers.verify_theorem1(Grid.of(inst.A, inst.B, p)))
    elif args.cor2 is not None:
        _need(inst, "A")
        reports.append(verifiers.verify_cor2(inst.A, args.cor2, p))
    elif args.cor3:
        _need(inst, "A")
        reports.append(verifiers.verify_cor3(inst.A, p))
    elif args.cor4:
        _need(inst, "A", "B")
        reports.append(verifiers.verify_cor4(inst.A, inst.B, p))
    elif args.cor5:
        _need(inst, "A")
        reports.append(verifiers.verify_cor5(inst.A, p))
    elif args.remarks:
        _need(inst, "A")
        reports += [verifiers.verify_remark("i", inst.A, p), verifiers.verify_remark("I", inst.A, p)]
        if inst.B is not None:
            reports += [verifiers.verify_remark("ii", inst.B, p), verifiers.verify_remark("II", inst.B, p)]
    doc = {"instance": inst.to_dict(), "reports": [r.to_dict() for r in reports]}
    return doc, _report_exit(reports)


def _budget(args) -> search.SearchBudget:
    nodes = getattr(args, "budget_nodes", None)
    secs = getattr(args, "budget_seconds", None)
    if (nodes is not None and nodes <= 0) or (secs is not None and secs <= 0):
        raise InstanceError("budget flags must be positive", source="command line")
    return search.SearchBudget(nodes, secs, getattr(args, "seed", 0))


def cmd_search(args) -> tuple[dict, int]:
    budget = _budget(args)
    try:
        modulus(args.p)
    except NotPrimeError as e:
        raise InstanceError(str(e), source="command line") from None
    code = EXIT_OK
    if args.mode == "paley":
        res = search.paley_clique_number(args.p, budget)
        doc = {"mode": "paley", "p": args.p, **res.to_dict()}
        if res.status is search.Status.COMPLETE and not res.bound_holds:
            code = EXIT_VIOLATION
    elif args.mode == "zd":
        res = search.zd_max_clique(args.p, args.d, budget)
        doc = {"mode": "zd", "p": args.p, "d": args.d, **res.to_dict()}
        if res.regime == "proper" and res.status is search.Status.COMPLETE and not res.bound_holds:
            code = EXIT_VIOLATION
    elif args.mode == "tight":
        res = search.search_tight_grids(args.p, (2, args.mA), (2, args.mB), budget)
        doc = {"mode": "tight", **res.to_dict()}
    else:
        if args.random_trials:
            res = search.randomized_theorem1_sweep(args.p, args.random_trials, getattr(args, "seed", 0))
        else:
            res = search.exhaustive_theorem1_sweep(args.p, args.ceiling, getattr(args, "workers", 1))
        doc = {"mode": "sweep", "status": search.Status.COMPLETE.value, **res.to_dict()}
        if res.violations:
            code = EXIT_VIOLATION
    return doc, code


def _poly_arg(text: str, p: int, name: str) -> DensePolynomial:
    coeffs = [_parse_int(c, None, None, f"--lemma {name}") for c in text.split(",")]
    return DensePolynomial.from_ints(coeffs, p)


def cmd_redei(args) -> tuple[dict, int]:
    inst = load_instance(args)
    p = inst.p
    doc: dict[str, Any] = {"instance": inst.to_dict()}
    if args.lemma:
        R_text, S_text, m_text = args.lemma
        R, S = _poly_arg(R_text, p, "R"), _poly_arg(S_text, p, "S")
        m = _parse_int(m_text, None, None, "--lemma m")
        rep = redei.lemma_divisibility_check(R, S, m)
        doc["lemma"] = {
            "R": list(R.coeffs),
            "S": list(S.coeffs),
            "m": m,
            "K": rep.K,
            "hypotheses": rep.hypotheses,
            "hypotheses_ok": rep.hypotheses_ok,
            "divisible": rep.divisible,
            "residue": list(rep.residue.coeffs),
        }
        if not rep.hypotheses_ok:
            return doc, EXIT_HYPOTHESIS
        return doc, EXIT_VIOLATION if rep.divisible else EXIT_OK

    _need(inst, "A", "B")
    U = Grid.of(inst.A, inst.B, p).expand()
    if len(U) >= p:
        doc["error"] = f"|U| = {len(U)} must be below p = {p}"
        return doc, EXIT_HYPOTHESIS
    D = directions_of_pointset(U)
    if args.check_y is not None:
        y0 = args.check_y % p
        ok = redei.product_check(U, y0)
        doc["check"] = {"y": y0, "product_is_x^p-x": ok, "y_in_D": y0 in D}
        return doc, EXIT_OK if ok == (y0 not in D) else EXIT_VIOLATION
    cp = redei.coefficient_profile(U)
    bound = redei.lacunarity_lower_bound(cp)
    doc["profile"] = {
        "size": cp.size,
        "first_nonzero_index": cp.first_nonzero_index,
        "nonzero_indices": [i for i in range(1, p) if cp.flag(i) is redei.HFlag.NONZERO],
        "shear": cp.shear,
        "collinear": cp.collinear,
        "lower_bound": bound,
        "directions": len(D),
    }
    return doc, EXIT_OK if bound <= len(D) else EXIT_VIOLATION


# --- plumbing ----------------------------------------------------------------


def _common(parser: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    g = parser.add_argument_group("global options")
    g.add_argument("--json", action="store_true", default=d(False), help="emit one JSON document")
    g.add_argument("--workers", type=int, default=d(1))
    g.add_argument("--seed", type=int, default=d(0))
    g.add_argument("--budget-nodes", type=int, default=d(None))
    g.add_argument("--budget-seconds", type=float, default=d(None))


def _instance_args(parser: argparse.ArgumentParser):
    parser.add_argument("instance", nargs="?", help="instance file with p, A, B lines")
    parser.add_argument("--p", dest="inline_p")
    parser.add_argument("--A", dest="inline_A")
    parser.add_argument("--B", dest="inline_B")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="redei-directions", description=__doc__.splitlines()[0])
    _common(ap, suppress=False)
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("directions", help="direction set of A x B")
    _common(d, suppress=True)
    _instance_args(d)
    how = d.add_mutually_exclusive_group()
    how.add_argument("--grid", action="store_true", help="quotient-set algorithm (default)")
    how.add_argument("--points", action="store_true", help="pairwise enumeration")
    d.add_argument("--list", action="store_true")
    d.set_defaults(func=cmd_directions)

    v = sub.add_parser("verify", help="check one statement on an instance")
    _common(v, suppress=True)
    _instance_args(v)
    which = v.add_mutually_exclusive_group(required=True)
    which.add_argument("--theorem1", action="store_true")
    which.add_argument("--cor2", type=int, metavar="D")
    which.add_argument("--cor3", action="store_true")
    which.add_argument("--cor4", action="store_true")
    which.add_argument("--cor5", action="store_true")
    which.add_argument("--remarks", action="store_true")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="clique and grid searches")
    _common(s, suppress=True)
    modes = s.add_subparsers(dest="mode", required=True)
    sp = modes.add_parser("paley")
    sp.add_argument("p", type=int)
    sz = modes.add_parser("zd")
    sz.add_argument("p", type=int)
    sz.add_argument("d", type=int)
    st = modes.add_parser("tight")
    st.add_argument("p", type=int)
    st.add_argument("mA", type=int, help="largest |A|")
    st.add_argument("mB", type=int, help="largest |B|")
    sw = modes.add_parser("sweep")
    sw.add_argument("p", type=int)
    sw.add_argument("--random-trials", type=int, default=0)
    sw.add_argument("--ceiling", type=int, default=search.EXHAUSTIVE_CEILING)
    for m in (sp, sz, st, sw):
        _common(m, suppress=True)
    s.set_defaults(func=cmd_search)

    r = sub.add_parser("redei", help="Rédei polynomial machinery on A x B")
    _common(r, suppress=True)
    _instance_args(r)
    what = r.add_mutually_exclusive_group(required=True)
    what.add_argument("--profile", action="store_true")
    what.add_argument("--check-y", type=int, metavar="Y0")
    what.add_argument("--lemma", nargs=3, metavar=("R", "S", "M"), help="coefficients constant term first")
    r.set_defaults(func=cmd_redei)
    return ap


def _render(doc: Any, indent: str = "") -> list[str]:
    """Plain-text view carrying the same fields as the JSON document."""
    lines = []
    items = doc.items() if isinstance(doc, dict) else ((f"[{i}]", v) for i, v in enumerate(doc))
    for k, v in items:
        nested = isinstance(v, dict) or (isinstance(v, list) and any(isinstance(x, (dict, list)) for x in v))
        if nested:
            lines.append(f"{indent}{k}:")
            lines += _render(v, indent + "  ")
        elif isinstance(v, list):
            lines.append(f"{indent}{k}: {', '.join(map(str, v))}")
        else:
            lines.append(f"{indent}{k}: {v}")
    return lines


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        doc, code = args.func(args)
    except (InstanceError, ReDirError, ValueError) as e:  # ValueError: sweep above the ceiling
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    doc = {"command": args.command, **doc, "exit_code": code, "wall_time": round(time.perf_counter() - start, 6)}
    if getattr(args, "json", False):
        json.dump(doc, sys.stdout, default=str)
        sys.stdout.write("\n")
    else:
        print("\n".join(_render(doc)))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
