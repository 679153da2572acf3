"""Exact values of p_A(n), the number of partitions of n with parts in A.

Three independent routes:

* :func:`count_dp` expands the product generating function
  ``prod_a 1/(1 - x^a)`` coefficient by coefficient. Default for tables.
* :func:`count_recursive` follows the class decomposition: every partition
  of ``n`` uses the distinguished part ``a_k`` some ``u + l*d`` times, and
  class ``l`` is counted by ``p_{A'}(m - l*a_k)``.
* :func:`enumerate_partitions` lists the multisets explicitly. Slow, only
  meant as a test oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .partset import (
    NathansonSplit,
    PartitionError,
    PartSet,
    as_part_set,
    reduce_by_gcd,
    require_coprime,
    split,
)

ENUM_BOUND = 200
ENUM_CAP = 10**6


class CapExceeded(PartitionError):
    pass


@dataclass(frozen=True)
class CountTable:
    A: PartSet
    max_n: int
    counts: list[int]

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def __len__(self):
        return len(self.counts)


@dataclass(frozen=True)
class ResidueReduction:
    n: int
    u: int
    m: int
    r: int


def count_dp(A: PartSet, max_n: int) -> CountTable:
    """Table of p_A(0..max_n) by generating-function expansion.

    Works for any part set, coprime or not; cost is ``k * max_n`` big-int
    additions.
    """
    A = as_part_set(A)
    if max_n < 0:
        raise ValueError(f"max_n must be nonnegative, got {max_n}")
    c = [0] * (max_n + 1)
    c[0] = 1
    for a in A.parts:
        for i in range(a, max_n + 1):
            c[i] += c[i - a]
    return CountTable(A, max_n, c)


def residue_reduction(n: int, sp: NathansonSplit) -> ResidueReduction:
    """Solve ``n = u*a_k (mod d)`` for ``0 <= u < d`` and derive ``m`` and ``r``.

    Below ``n >= (d-1)*a_k`` the reduced target ``m`` can be negative; then
    there is no admissible class and ``r = -1``.
    """
    d, a_k = sp.d, sp.a_k
    u = n * pow(a_k, -1, d) % d if d > 1 else 0
    m = (n - u * a_k) // d
    r = m // a_k if m >= 0 else -1
    return ResidueReduction(n=n, u=u, m=m, r=r)


@lru_cache(maxsize=1 << 20)
def _recursive(parts: tuple[int, ...], n: int, index: int) -> int:
    if len(parts) == 1:
        # gcd 1 forces parts == (1,)
        return 1
    sp = split(PartSet(parts), index)
    rr = residue_reduction(n, sp)
    if rr.r < 0:
        return 0
    if sp.A_prime.k == 1:
        # every class contributes p_{1}(.) = 1
        return rr.r + 1
    sub = sp.A_prime.parts
    return sum(_recursive(sub, rr.m - l * sp.a_k, index) for l in range(rr.r + 1))


def count_recursive(A: PartSet, n: int, index: int = -1) -> int:
    """p_A(n) by the class-decomposition recursion on coprime ``A``.

    ``index`` selects the distinguished part at every level (taken modulo
    the current cardinality); the default is the largest part. Results are
    memoized on ``(parts, n, index)``.
    """
    A = as_part_set(A)
    require_coprime(A)
    if n < 0:
        return 0
    return _recursive(A.parts, n, index)


def enumerate_partitions(
    A: PartSet, n: int, cap: int = ENUM_CAP, bound: int = ENUM_BOUND
) -> list[tuple[int, ...]]:
    """All multisets of parts of ``A`` summing to ``n``, as sorted tuples.

    Raises :class:`CapExceeded` once more than ``cap`` are found.
    """
    A = as_part_set(A)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > bound:
        raise ValueError(f"n={n} exceeds the enumeration bound {bound}")
    parts = A.parts[::-1]
    out: list[tuple[int, ...]] = []
    stack: list[int] = []

    def walk(rest: int, i: int):
        if rest == 0:
            if len(out) >= cap:
                raise CapExceeded(f"more than {cap} partitions of {n} into {A.parts}")
            out.append(tuple(reversed(stack)))
            return
        for j in range(i, len(parts)):
            a = parts[j]
            if a <= rest:
                stack.append(a)
                walk(rest - a, j)
                stack.pop()

    walk(n, 0)
    return out


def count_any(
    A: PartSet, n: int, method: Literal["dp", "recursive"] = "dp"
) -> int:
    """p_A(n) for any part set; a gcd ``g > 1`` is divided out first."""
    A = as_part_set(A)
    if n < 0:
        return 0
    reduced, g = reduce_by_gcd(A)
    if n % g:
        return 0
    n //= g
    if method == "dp":
        return count_dp(reduced, n).counts[n]
    if method == "recursive":
        return count_recursive(reduced, n)
    raise ValueError(f"unknown method {method!r}")
