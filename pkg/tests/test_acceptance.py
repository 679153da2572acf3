"""Exit criteria. Each test appends one PASS/FAIL line to the summary."""
import contextlib
import io
import time
from fractions import Fraction
from itertools import combinations
from math import gcd
from pathlib import Path

import pytest

from conftest import ACCEPTANCE_LINES
from denumerant import (
    alternating_binomial_check,
    count_dp,
    count_recursive,
    enumerate_partitions,
    erdos_lehner_coefficient,
    error_slope,
    frobenius,
    leading_coefficient,
    make_part_set,
    power_sum_check,
    report_table,
)
from denumerant.cli import main
from denumerant.exact import _recursive
from oracles import brute_frobenius

GOLDEN = Path(__file__).parent / "golden"


def family():
    for r in range(1, 5):
        for s in combinations(range(1, 10), r):
            if gcd(*s) == 1:
                yield make_part_set(s)


def verdict(tag, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {tag}: {detail}")
    assert ok, detail


def test_c1_oracle_equivalence():
    _recursive.cache_clear()
    t0 = time.perf_counter()
    mismatches = []
    sets = list(family())
    for A in sets:
        table = count_dp(A, 120).counts
        for n in range(121):
            rec = count_recursive(A, n)
            if rec != table[n]:
                mismatches.append((A.parts, n, table[n], rec))
            elif n <= 40 and len(enumerate_partitions(A, n)) != rec:
                mismatches.append((A.parts, n, table[n], "enum"))
    elapsed = time.perf_counter() - t0
    verdict(
        "C1 oracle equivalence",
        not mismatches and elapsed < 60,
        f"{len(sets)} sets, {len(mismatches)} mismatches, {elapsed:.2f}s (limit 60s)",
    )


def test_c2_ratio_convergence():
    A = make_part_set([3, 5, 7])
    t0 = time.perf_counter()
    table = count_dp(A, 10**5).counts
    elapsed = time.perf_counter() - t0
    devs = [abs(Fraction(table[n] * 210, n * n) - 1) for n in (10**3, 10**4, 10**5)]
    ok = devs[0] > devs[1] > devs[2] and devs[2] < Fraction(1, 100) and elapsed < 10
    verdict(
        "C2 ratio convergence {3,5,7}",
        ok,
        "|p/L-1| = " + ", ".join(f"{float(d):.3e}" for d in devs) + f"; table in {elapsed:.2f}s (limit 10s)",
    )


@pytest.mark.parametrize(
    "parts, n_min, n_max, limit",
    [([3, 5, 7], 64, 65536, 1.15), ([1, 2], 16, 4096, 0.15), ([4, 9, 11, 13], 64, 65536, 2.15)],
)
def test_c3_error_order(parts, n_min, n_max, limit):
    fit = error_slope(make_part_set(parts), n_min, n_max, 8)
    verdict(f"C3 error slope {tuple(parts)}", fit.slope <= limit, f"slope {fit.slope:.4f} <= {limit}")


@pytest.mark.parametrize("parts", [[3, 5, 7], [2, 3, 5]])
def test_c4_normalized_envelope(parts):
    A = make_part_set(parts)
    reps = report_table(A, 10**5)
    k = A.k
    norm = [None] + [r.abs_err / r.n ** (k - 2) for r in reps[1:]]
    C = max(norm[100:1001])
    worst = max(norm[1001:])
    verdict(
        f"C4 normalized-error envelope {tuple(parts)}",
        worst <= 4 * C,
        f"C = {float(C):.6g}, max on (1e3, 1e5] = {float(worst):.6g} <= 4C = {float(4 * C):.6g}",
    )


def test_c5_k2_tightness():
    N = 10**4
    violations = 0
    pairs = 0
    for a in range(1, 13):
        for b in range(a + 1, 13):
            if gcd(a, b) != 1:
                continue
            pairs += 1
            table = count_dp(make_part_set([a, b]), N).counts
            # |p - n/(ab)| <= 1  <=>  |p*ab - n| <= ab
            violations += sum(1 for n in range(1, N + 1) if abs(table[n] * a * b - n) > a * b)
    verdict("C5 k=2 tightness", violations == 0, f"{pairs} pairs x n <= 1e4, {violations} violations")


def _threshold_ok(A):
    res = frobenius(A)
    t = res.threshold
    table = count_dp(A, t + 1000).counts
    below = t == 0 or table[t - 1] == 0
    return below and all(table[n] >= 1 for n in range(t, t + 1001))


def test_c6_frobenius():
    problems = []
    # oracle first, then the Apery computation
    for parts, f, limit in (([3, 5], 7, 40), ([6, 9, 20], 43, 200)):
        if brute_frobenius(parts, limit) != f:
            problems.append(f"brute {parts}")
        if frobenius(make_part_set(parts)).frobenius != f:
            problems.append(f"apery {parts}")
    sets = [make_part_set([3, 5]), make_part_set([6, 9, 20])]
    for x in range(2, 11):
        A = make_part_set([1, x])
        sets.append(A)
        if frobenius(A).frobenius != -1:
            problems.append(f"{{1,{x}}}")
    for a in range(1, 31):
        for b in range(a + 1, 31):
            if gcd(a, b) == 1:
                A = make_part_set([a, b])
                sets.append(A)
                if frobenius(A).frobenius != a * b - a - b:
                    problems.append(f"{{{a},{b}}}")
    problems += [f"threshold {A.parts}" for A in sets if not _threshold_ok(A)]
    verdict("C6 Frobenius", not problems, f"{len(sets)} sets checked, problems: {problems or 'none'}")


def test_c7_identities():
    el = all(leading_coefficient(make_part_set(range(1, k + 1))) == erdos_lehner_coefficient(k) for k in range(1, 9))
    alt = all(alternating_binomial_check(k) for k in range(2, 65))
    ps = all(power_sum_check(r, j)[1] for r in (0, 1, 10, 100, 10**4) for j in range(9))
    verdict(
        "C7 coefficient identities",
        el and alt and ps,
        f"Erdos-Lehner k=1..8: {el}; alternating binomial k=2..64: {alt}; power sums: {ps}",
    )


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue()


def test_c8_cli_contract():
    failed_verify = [
        A.parts for A in family()
        if _cli("verify", "--parts", ",".join(map(str, A.parts)), "--max-n", "120", "--enum-max", "40")[0] != 0
    ]
    golden = {
        fmt: _cli("table", "--parts", "2,3", "--max-n", "20", "--format", fmt)[1]
        == (GOLDEN / f"table_2_3_20.{fmt}").read_text()
        for fmt in ("csv", "json")
    }
    code1 = _cli("frobenius", "--parts", "4,6")[0]
    code2 = _cli("count", "--parts", "0,3", "--n", "5")[0]
    code2b = _cli("verify", "--parts", "3,5", "--max-n", "-1")[0]
    ok = not failed_verify and all(golden.values()) and code1 == 1 and code2 == 2 and code2b == 2
    verdict(
        "C8 CLI contract",
        ok,
        f"verify failures {failed_verify or 'none'}; golden {golden}; exit codes 1={code1}, 2={code2},{code2b}",
    )
