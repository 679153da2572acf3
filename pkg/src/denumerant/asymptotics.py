"""Leading term of p_A(n) and the size of what is left over.

For coprime ``A`` with ``k`` parts,

    p_A(n) = n^(k-1) / (prod(A) * (k-1)!) + O(n^(k-2)).

The leading term is kept as an exact :class:`fractions.Fraction`; floats
only show up in ``ratio``, ``norm_err`` and the fitted slope.
"""
from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exact import count_dp
from .partset import NeedsTwoParts, PartitionError, PartSet, as_part_set, require_coprime


class DegenerateFit(PartitionError):
    pass


def _denominator(A: PartSet) -> int:
    return math.prod(A.parts) * math.factorial(A.k - 1)


def leading_coefficient(A: PartSet) -> Fraction:
    """``1 / (prod(A) * (k-1)!)``."""
    A = as_part_set(A)
    require_coprime(A)
    return Fraction(1, _denominator(A))


def leading_term(A: PartSet, n: int) -> Fraction:
    A = as_part_set(A)
    return leading_coefficient(A) * n ** (A.k - 1)


def erdos_lehner_coefficient(k: int) -> Fraction:
    """Coefficient ``1 / (k! (k-1)!)`` for ``A = {1, ..., k}``."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return Fraction(1, math.factorial(k) * math.factorial(k - 1))


@dataclass(frozen=True)
class AsymptoticReport:
    """Exact count next to the leading term.

    ``ratio`` is ``None`` when the leading term vanishes (``n = 0``, ``k >= 2``)
    and ``norm_err`` is ``None`` for ``k = 1`` or for ``n = 0`` with ``k >= 3``.
    """

    n: int
    exact: int
    leading: Fraction
    ratio: Optional[float]
    abs_err: Fraction
    norm_err: Optional[float]


def _make_report(k: int, den: int, n: int, exact: int) -> AsymptoticReport:
    top = n ** (k - 1)
    leading = Fraction(top, den)
    abs_err = Fraction(abs(exact * den - top), den)
    ratio = float(Fraction(exact * den, top)) if top else None
    if k < 2 or (n == 0 and k > 2):
        norm_err = None
    else:
        norm_err = float(abs_err / n ** (k - 2))
    return AsymptoticReport(n, exact, leading, ratio, abs_err, norm_err)


def report(A: PartSet, n: int, exact: Optional[int] = None) -> AsymptoticReport:
    """Compare p_A(n) with its leading term. ``exact`` skips the recount."""
    A = as_part_set(A)
    require_coprime(A)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if exact is None:
        exact = count_dp(A, n).counts[n]
    return _make_report(A.k, _denominator(A), n, exact)


def report_table(A: PartSet, max_n: int, counts: Optional[Sequence[int]] = None) -> list[AsymptoticReport]:
    """Reports for every ``n`` in ``0..max_n`` (the ``n = 0`` row included)."""
    A = as_part_set(A)
    require_coprime(A)
    if counts is None:
        counts = count_dp(A, max_n).counts
    den = _denominator(A)
    return [_make_report(A.k, den, n, counts[n]) for n in range(max_n + 1)]


@dataclass(frozen=True)
class SlopeFit:
    A: PartSet
    windows: list[tuple[float, Fraction]]
    slope: float
    intercept: float


def window_edges(n_min: int, n_max: int, windows: int) -> list[int]:
    """Geometrically spaced integer edges; window ``i`` is ``[e[i], e[i+1])``."""
    q = n_max / n_min
    edges = [n_min] + [round(n_min * q ** (i / windows)) for i in range(1, windows)] + [n_max + 1]
    if any(x >= y for x, y in zip(edges, edges[1:])):
        raise ValueError(f"[{n_min}, {n_max}] is too narrow for {windows} windows")
    return edges


def error_slope(A: PartSet, n_min: int, n_max: int, windows: int) -> SlopeFit:
    """Least-squares slope of log(max |p_A(n) - L(n)|) against log(n).

    Window maxima rather than means, since the error oscillates with the
    residue of ``n`` and the bound is about its envelope. Windows whose
    maximum error is zero are left out of the fit.
    """
    A = as_part_set(A)
    require_coprime(A)
    if A.k < 2:
        raise NeedsTwoParts("the error exponent needs k >= 2")
    if n_min < 16 or n_max < 8 * n_min or windows < 4:
        raise ValueError("need n_min >= 16, n_max >= 8*n_min and windows >= 4")
    counts = count_dp(A, n_max).counts
    den = _denominator(A)
    e = A.k - 1
    edges = window_edges(n_min, n_max, windows)
    pts = []
    for lo, hi in zip(edges, edges[1:]):
        worst = max(abs(counts[n] * den - n**e) for n in range(lo, hi))
        pts.append((math.sqrt(lo * (hi - 1)), Fraction(worst, den)))
    used = [(c, err) for c, err in pts if err > 0]
    if len(used) < 2:
        raise DegenerateFit(f"only {len(used)} windows with nonzero error")
    xs = [math.log(c) for c, _ in used]
    ys = [math.log(err) for _, err in used]
    slope, intercept = statistics.linear_regression(xs, ys)
    return SlopeFit(A, pts, slope, intercept)


def power_sum_check(r: int, j: int) -> tuple[int, bool]:
    """``sum(l**j for l in 0..r)`` and whether it lies within
    ``[r^(j+1)/(j+1), r^(j+1)/(j+1) + r^j + 1]``."""
    exact_sum = sum(l**j for l in range(r + 1))
    excess = exact_sum - Fraction(r ** (j + 1), j + 1)
    return exact_sum, 0 <= excess <= r**j + 1


def alternating_binomial_check(k: int) -> bool:
    """True iff ``sum_{j=0}^{k-2} (-1)^j C(k-1, j+1) == 1``."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    return sum((-1) ** j * math.comb(k - 1, j + 1) for j in range(k - 1)) == 1
