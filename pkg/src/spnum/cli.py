"""Command-line front end: classification, censuses, digit tallies, witness
generation with independent re-verification, Pell solving, and the analytic
constants.

Output is deterministic: stable ordering and fixed float formatting
(6 significant digits in census/digit tables, 12 for the analytic
constants).  Exit codes: 0 success/membership, 1 honest negative
(non-member, unsolvable, precondition failure), 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from decimal import Decimal, InvalidOperation
from fractions import Fraction

from . import analytic, census, construct, pell
from .classify import kp_decompose, sp_decompose, verify_sp_witness

MAX_CENSUS_BOUND = 10**10  # sieve memory/time budget for one invocation

_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _sup(k: int) -> str:
    return str(k).translate(_SUP)


def _fmt6(x: float) -> str:
    return f"{x:.6g}"


def _sp_str(n: int, p: int, a: int, k: int = 2) -> str:
    return f"{n} = {p} · {a}{_sup(k)}"


def _nat(text: str) -> int:
    """Integer argument, accepting scientific notation like 1e6."""
    try:
        d = Decimal(text)
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if d != d.to_integral_value():
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(d)


def _emit_json(command: str, parameters: dict, results: list) -> None:
    print(json.dumps({"command": command, "parameters": parameters, "results": results}, indent=2))


def _jsonable(obj):
    if hasattr(obj, "__dataclass_fields__"):
        return asdict(obj)
    return obj


# ---------------------------------------------------------------- classify


def cmd_classify(args: argparse.Namespace) -> int:
    n, k = args.n, args.k
    if k < 2:
        print(f"error: k must be >= 2, got {k}", file=sys.stderr)
        return 2
    w = kp_decompose(n, k)
    if args.format == "json":
        _emit_json("classify", {"n": n, "k": k}, [asdict(w)] if w else [])
        return 0 if w else 1
    if w is None:
        print(f"{n} is not a KP_{k} number")
        return 1
    print(_sp_str(w.n, w.p, w.a, w.k))
    return 0


# ------------------------------------------------------------------ census


def _parse_checkpoints(text: str) -> list[int]:
    return [_nat(part) for part in text.split(",") if part]


def cmd_census(args: argparse.Namespace) -> int:
    bound = args.bound
    if bound < 2:
        print(f"error: bound must be >= 2, got {bound}", file=sys.stderr)
        return 2
    if bound > MAX_CENSUS_BOUND:
        print(
            f"error: bound {bound} exceeds the sieve budget ({MAX_CENSUS_BOUND}); "
            "raise MAX_CENSUS_BOUND only with memory to spare",
            file=sys.stderr,
        )
        return 2
    if args.family == "psp" and args.k != 2:
        print("error: --family psp supports k = 2 only", file=sys.stderr)
        return 2
    checkpoints = args.checkpoints if args.checkpoints is not None else [bound]
    if any(c < 2 or c > bound for c in checkpoints) or checkpoints != sorted(checkpoints):
        print("error: checkpoints must be ascending and within [2, bound]", file=sys.stderr)
        return 2
    rows = census.census_table(checkpoints, args.k, args.family)
    if args.format == "json":
        _emit_json(
            "census",
            {"bound": bound, "k": args.k, "family": args.family, "checkpoints": checkpoints},
            [
                {
                    "n": r.n,
                    "exact": r.exact,
                    "estimate": float(_fmt6(r.estimate)),
                    "ratio": float(_fmt6(r.ratio)),
                }
                for r in rows
            ],
        )
    elif args.format == "csv":
        sys.stdout.write("n,exact,estimate,ratio\n")
        for r in rows:
            sys.stdout.write(f"{r.n},{r.exact},{_fmt6(r.estimate)},{_fmt6(r.ratio)}\n")
    else:
        print(f"{'n':>12} {'exact':>10} {'estimate':>12} {'ratio':>10}")
        for r in rows:
            print(f"{r.n:>12} {r.exact:>10} {_fmt6(r.estimate):>12} {_fmt6(r.ratio):>10}")
    return 0


# ------------------------------------------------------------------ digits


def cmd_digits(args: argparse.Namespace) -> int:
    bound = args.bound
    if bound < 2:
        print(f"error: bound must be >= 2, got {bound}", file=sys.stderr)
        return 2
    dc = census.digit_census(bound)
    est = analytic.digit1_estimate(bound) if bound >= 3 else None
    if args.format == "json":
        results = []
        for digit, count in enumerate(dc.counts):
            row = {"digit": digit, "count": count}
            if digit == 1 and est is not None:
                row["estimate"] = float(_fmt6(est))
            results.append(row)
        _emit_json("digits", {"bound": bound}, results)
    elif args.format == "csv":
        sys.stdout.write("digit,count\n")
        for digit, count in enumerate(dc.counts):
            sys.stdout.write(f"{digit},{count}\n")
    else:
        print(f"{'digit':>5} {'count':>10}")
        for digit, count in enumerate(dc.counts):
            suffix = f"  (estimate {_fmt6(est)})" if digit == 1 and est is not None else ""
            print(f"{digit:>5} {count:>10}{suffix}")
        print(f"total {dc.total():>10}")
    return 0


# ----------------------------------------------------------------- witness


def _verify_sp(w) -> bool:
    # invariant check, equivalent to sp_decompose(w.n) == w by uniqueness
    # but safe for witnesses too large to factor
    return verify_sp_witness(w)


def _verify_witness(kind: str, w) -> bool:
    if kind == "gap":
        return construct.verify_gap_witness(w)
    if kind == "x2p1":
        return w.sp.n == w.x**2 + 1 and _verify_sp(w.sp)
    if kind == "between-squares":
        return (
            w.sp.n == 2 * w.n**2
            and w.x**2 < w.sp.n < (w.x + 2) ** 2
            and _verify_sp(w.sp)
        )
    if kind == "sum":
        return (
            w.part1.n + w.part2.n == w.input.n
            and w.q == w.u**2 + w.v**2
            and w.q % 4 == 1
            and w.input.a % w.q == 0
            and _verify_sp(w.input)
            and _verify_sp(w.part1)
            and _verify_sp(w.part2)
        )
    if kind == "x3p1":
        p, x, y = w.curve_point
        return (
            w.sp.n == x**3 + 1
            and p == w.sp.p
            and y == w.sp.p * w.sp.a
            and y * y == p * x**3 + p
            and _verify_sp(w.sp)
        )
    raise ValueError(kind)  # pragma: no cover


def _witness_lines(kind: str, w) -> list[str]:
    if kind == "gap":
        lines = [
            f"gap {w.x}: {w.hi.n} - {w.lo.n} = {w.x}  [case {w.case_tag}]",
            f"  hi: {_sp_str(w.hi.n, w.hi.p, w.hi.a)}",
            f"  lo: {_sp_str(w.lo.n, w.lo.p, w.lo.a)}",
        ]
        if w.case_tag == "PRIME":
            s = w.aux["pell"]
            lines.append(f"  pell: D={s.D} (x, y) = ({s.x}, {s.y})")
        if w.case_tag == "NONSQUAREFREE":
            lines.append(f"  scaled by t={w.aux['t']} from gap {w.aux['s']}")
        return lines
    if kind == "x2p1":
        return [f"x={w.x}: {_sp_str(w.sp.n, w.sp.p, w.sp.a)}"]
    if kind == "between-squares":
        return [
            f"x={w.x}: {w.x**2} < {_sp_str(w.sp.n, w.sp.p, w.sp.a)} < {(w.x + 2) ** 2}"
        ]
    if kind == "sum":
        return [
            f"{w.input.n} = {w.part1.n} + {w.part2.n}"
            f"  [q={w.q} = {w.u}² + {w.v}²]",
            f"  part1: {_sp_str(w.part1.n, w.part1.p, w.part1.a)}",
            f"  part2: {_sp_str(w.part2.n, w.part2.p, w.part2.a)}",
        ]
    if kind == "x3p1":
        p, x, y = w.curve_point
        t = f" t={w.t}" if hasattr(w, "t") else ""
        return [
            f"x={x}:{t} {_sp_str(w.sp.n, w.sp.p, w.sp.a)}  curve (p, x, y) = ({p}, {x}, {y})"
        ]
    raise ValueError(kind)  # pragma: no cover


def cmd_witness(args: argparse.Namespace) -> int:
    kind = args.kind
    witnesses: list
    if kind == "gap":
        witnesses = [construct.gap_witness(args.x)]
    elif kind == "x2p1":
        if args.bound is not None:
            witnesses = construct.x2p1_scan(args.bound)
        else:
            witnesses = construct.x2p1_stream(args.count)
    elif kind == "between-squares":
        witnesses = [construct.between_squares(args.x)]
    elif kind == "sum":
        sp = sp_decompose(args.n)
        if sp is None:
            print(f"{args.n} is not an SP number", file=sys.stderr)
            return 1
        w = construct.sum_decompose(sp)
        if w is None:
            print(f"no prime factor = 1 (mod 4) in the square base {sp.a}", file=sys.stderr)
            return 1
        witnesses = [w]
    else:  # x3p1
        if args.bound is not None:
            witnesses = construct.x3p1_scan(args.bound)
        else:
            witnesses = construct.x3p1_family(args.t_max)
    verified = [_verify_witness(kind, w) for w in witnesses] if args.verify else None
    if args.format == "json":
        results = []
        for i, w in enumerate(witnesses):
            entry = asdict(w)
            if verified is not None:
                entry["verified"] = verified[i]
            results.append(entry)
        params = {
            key: value
            for key, value in vars(args).items()
            if key in ("x", "n", "count", "bound", "t_max", "verify") and value is not None
        }
        _emit_json(f"witness {kind}", params, results)
    else:
        for i, w in enumerate(witnesses):
            for line in _witness_lines(kind, w):
                print(line)
            if verified is not None:
                print(f"  verify: {'PASS' if verified[i] else 'FAIL'}")
    if verified is not None and not all(verified):
        return 1
    return 0


# -------------------------------------------------------------------- pell


def cmd_pell(args: argparse.Namespace) -> int:
    try:
        sols = pell.solution_stream(args.D, args.norm, args.count)
    except ValueError as exc:
        if "no integer solution" in str(exc):
            print(str(exc), file=sys.stderr)
            return 1
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        _emit_json(
            "pell",
            {"D": args.D, "norm": args.norm, "count": args.count},
            [asdict(s) for s in sols],
        )
    else:
        for s in sols:
            print(f"x={s.x} y={s.y}  [x² - {s.D}·y² = {s.norm:+d}]")
    return 0


# ---------------------------------------------------------------- estimate


def cmd_estimate(args: argparse.Namespace) -> int:
    try:
        if args.what == "zeta":
            est = analytic.zeta(int(args.value))
            label = f"zeta({int(args.value)})"
        elif args.what == "prime-zeta":
            est = analytic.prime_zeta(int(args.value))
            label = f"P({int(args.value)})"
        else:
            q = Fraction(args.value)
            est = analytic.hurwitz_zeta2(q)
            label = f"zeta(2, {q})"
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        _emit_json(
            "estimate",
            {"what": args.what, "value": str(args.value)},
            [{"label": label, "value": float(f"{est.value:.12g}"),
              "abs_error_bound": float(_fmt6(est.abs_error_bound))}],
        )
    else:
        print(f"{label} = {est.value:.12g}  (abs error <= {_fmt6(est.abs_error_bound)})")
    return 0


# ------------------------------------------------------- bunyakovsky-report


def cmd_bunyakovsky(args: argparse.Namespace) -> int:
    rep = construct.bunyakovsky_report()
    if args.format == "json":
        _emit_json("bunyakovsky-report", {}, [asdict(rep)])
        return 0
    print(f"polynomial           {rep.polynomial}")
    print(f"leading coefficient  {rep.leading_coefficient} (positive: {rep.leading_positive})")
    print(f"rational roots       none among {list(rep.rational_root_candidates)}"
          if not rep.has_rational_root else "rational roots       FOUND")
    print(f"quadratic split      {'none' if not rep.has_quadratic_split else 'FOUND'}")
    print(f"irreducible          {rep.irreducible}")
    print(f"identity t²·f(t) = (t²-1)³+1 verified: {rep.identity_checked}")
    print(f"f(2), f(3)           {rep.f2}, {rep.f3}  gcd = {rep.gcd_f2_f3}")
    print(f"running gcd          {list(rep.running_gcd)} -> no fixed prime divisor: "
          f"{rep.fixed_divisor_free}")
    print(f"variant {rep.variant_polynomial}: gcd(g(2), g(3)) = {rep.variant_gcd_f2_f3}, "
          f"irreducible: {rep.variant_irreducible}  [fails both -> constant term 3 confirmed]")
    return 0


# -------------------------------------------------------------------- main


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="spnum",
        description="SP (p·a²), KP_k (p·aᵏ) and PSP (p₁·p₂²) numbers: "
        "classify, count, estimate, and construct certified witnesses.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="decompose n as p·aᵏ if possible")
    p.add_argument("n", type=_nat)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", help="exact counts vs analytic estimate")
    p.add_argument("bound", type=_nat)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--family", choices=("kp", "psp"), default="kp")
    p.add_argument("--checkpoints", type=_parse_checkpoints, default=None)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("digits", help="SP counts by final decimal digit")
    p.add_argument("bound", type=_nat)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_digits)

    p = sub.add_parser("witness", help="construct certified witnesses")
    wsub = p.add_subparsers(dest="kind", required=True)

    w = wsub.add_parser("gap", help="pair of SP numbers differing by x")
    w.add_argument("x", type=_nat)

    w = wsub.add_parser("x2p1", help="SP numbers of the form x²+1")
    w.add_argument("--count", type=_nat, default=3, help="Pell-family members (default)")
    w.add_argument("--bound", type=_nat, default=None, help="scan all forms up to bound instead")

    w = wsub.add_parser("between-squares", help="SP number 2n² in (x², (x+2)²)")
    w.add_argument("x", type=_nat)

    w = wsub.add_parser("sum", help="split an SP number into two SP numbers")
    w.add_argument("n", type=_nat)

    w = wsub.add_parser("x3p1", help="SP numbers of the form x³+1")
    w.add_argument("--t-max", dest="t_max", type=_nat, default=10,
                   help="parametric family up to t (default)")
    w.add_argument("--bound", type=_nat, default=None, help="scan all forms up to bound instead")

    for w in wsub.choices.values():
        w.add_argument("--verify", action="store_true",
                       help="re-check each witness with the independent verifier")
        w.add_argument("--format", choices=("table", "json"), default="table")
        w.set_defaults(func=cmd_witness)

    p = sub.add_parser("pell", help="solve x² - D·y² = ±1")
    p.add_argument("D", type=_nat)
    p.add_argument("--norm", type=int, choices=(1, -1), default=1)
    p.add_argument("--count", type=_nat, default=1)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("estimate", help="zeta-family constants with error bounds")
    p.add_argument("what", choices=("zeta", "prime-zeta", "hurwitz"))
    p.add_argument("value", help="integer k for zeta/prime-zeta, rational q for hurwitz")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("bunyakovsky-report", help="prime-generating checks for t⁴-3t²+3")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_bunyakovsky)

    return ap


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
