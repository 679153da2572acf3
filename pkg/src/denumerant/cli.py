"""Command-line front end.

Exit codes: 0 success, 1 domain or verification failure, 2 usage error.
Counts and rational components are written as decimal strings; real-valued
diagnostics carry 12 significant digits.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from .asymptotics import AsymptoticReport, error_slope, report, report_table
from .exact import ENUM_BOUND, count_any, count_dp, count_recursive, enumerate_partitions
from .partset import PartitionError, PartSet, make_part_set, reduce_by_gcd
from .representability import frobenius

CSV_HEADER = ["n", "count", "leading_num", "leading_den", "ratio", "abs_err_num", "abs_err_den", "norm_err"]


class UsageError(Exception):
    pass


def _real(x: Optional[float]) -> Optional[float]:
    return None if x is None else float(f"{x:.12g}")


def _parts(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"parts must be comma-separated integers, got {text!r}")


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _part_set(raw: list[int]) -> PartSet:
    try:
        A = make_part_set(raw)
    except PartitionError as e:
        raise UsageError(f"{type(e).__name__}: {e}")
    if A.dropped:
        print(f"note: {A.dropped} duplicate part(s) removed", file=sys.stderr)
    return A


def _row(n: int, count: int, rep: Optional[AsymptoticReport]) -> dict:
    row = dict.fromkeys(CSV_HEADER)
    row["n"] = n
    row["count"] = str(count)
    if rep is not None:
        row.update(
            leading_num=str(rep.leading.numerator),
            leading_den=str(rep.leading.denominator),
            ratio=_real(rep.ratio),
            abs_err_num=str(rep.abs_err.numerator),
            abs_err_den=str(rep.abs_err.denominator),
            norm_err=_real(rep.norm_err),
        )
    return row


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def cmd_count(args) -> int:
    A = _part_set(args.parts)
    n = args.n
    count = count_any(A, n, args.method)
    rep = None
    if A.g == 1:
        rep = report_table(A, 0, [count])[0] if n == 0 else report(A, n, exact=count)
    record = {"parts": list(A.parts), **_row(n, count, rep), "method": args.method, "reduced_by": A.g}
    _emit(record)
    return 0


def _table_rows(A: PartSet, max_n: int) -> list[dict]:
    counts = count_dp(A, max_n).counts
    if A.g == 1:
        reps = report_table(A, max_n, counts)
        return [_row(n, counts[n], reps[n]) for n in range(max_n + 1)]
    return [_row(n, counts[n], None) for n in range(max_n + 1)]


def render_table(A: PartSet, max_n: int, fmt: str) -> str:
    rows = _table_rows(A, max_n)
    if fmt == "json":
        return json.dumps(rows, indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for row in rows:
        w.writerow(["" if row[c] is None else (f"{row[c]:.12g}" if isinstance(row[c], float) else row[c]) for c in CSV_HEADER])
    return buf.getvalue()


def cmd_table(args) -> int:
    A = _part_set(args.parts)
    text = render_table(A, args.max_n, args.format)
    if args.out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(args.out, "w", newline="") as f:
            f.write(text)
    except OSError as e:
        print(f"error: cannot write {args.out}: {e}", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args) -> int:
    A = _part_set(args.parts)
    if args.enum_max > ENUM_BOUND:
        raise UsageError(f"--enum-max must be at most {ENUM_BOUND}")
    t0 = time.perf_counter()
    table = count_dp(A, args.max_n).counts
    reduced, g = reduce_by_gcd(A)
    for n in range(args.max_n + 1):
        values = {"dp": table[n]}
        values["recursive"] = count_recursive(reduced, n // g) if n % g == 0 else 0
        if n <= args.enum_max:
            values["enumeration"] = len(enumerate_partitions(A, n))
        if len(set(values.values())) > 1:
            _emit({"ok": False, "parts": list(A.parts), "n": n, "values": {k: str(v) for k, v in values.items()}})
            return 1
    print(f"verified in {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    _emit({"ok": True, "parts": list(A.parts), "max_n": args.max_n, "enum_max": args.enum_max})
    return 0


def cmd_asym(args) -> int:
    A = _part_set(args.parts)
    if args.n < 1:
        raise UsageError("--n must be positive")
    rep = report(A, args.n)
    _emit({"parts": list(A.parts), **_row(args.n, rep.exact, rep)})
    return 0


def _frac(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def cmd_fit(args) -> int:
    A = _part_set(args.parts)
    try:
        fit = error_slope(A, args.n_min, args.n_max, args.windows)
    except PartitionError:
        raise  # subclass of ValueError, still a domain error
    except ValueError as e:
        raise UsageError(str(e))
    _emit({
        "parts": list(A.parts),
        "windows": [{"n_center": _real(c), "max_abs_err": _frac(err)} for c, err in fit.windows],
        "slope": _real(fit.slope),
        "intercept": _real(fit.intercept),
    })
    return 0


def cmd_frobenius(args) -> int:
    A = _part_set(args.parts)
    res = frobenius(A)
    _emit({"parts": list(A.parts), "frobenius": res.frobenius, "threshold": res.threshold, "apery": list(res.apery)})
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="denumerant", description="Partitions with parts in a finite set.")
    sub = p.add_subparsers(dest="command", required=True)

    def parts_arg(sp):
        sp.add_argument("--parts", type=_parts, required=True, help="comma-separated positive integers")

    sp = sub.add_parser("count", help="p_A(n) for one n")
    parts_arg(sp)
    sp.add_argument("--n", type=_nonneg, required=True)
    sp.add_argument("--method", choices=["dp", "recursive"], default="dp")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("table", help="p_A(n) and the leading term for n = 0..max-n")
    parts_arg(sp)
    sp.add_argument("--max-n", type=_nonneg, required=True)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("verify", help="cross-check DP, recursion and enumeration")
    parts_arg(sp)
    sp.add_argument("--max-n", type=_nonneg, required=True)
    sp.add_argument("--enum-max", type=_nonneg, default=40)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("asym", help="exact count against the leading term")
    parts_arg(sp)
    sp.add_argument("--n", type=_nonneg, required=True)
    sp.set_defaults(func=cmd_asym)

    sp = sub.add_parser("fit", help="log-log slope of the error")
    parts_arg(sp)
    sp.add_argument("--n-min", type=_nonneg, required=True)
    sp.add_argument("--n-max", type=_nonneg, required=True)
    sp.add_argument("--windows", type=_nonneg, default=8)
    sp.set_defaults(func=cmd_fit)

    sp = sub.add_parser("frobenius", help="Frobenius number and Apery set")
    parts_arg(sp)
    sp.set_defaults(func=cmd_frobenius)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except PartitionError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
