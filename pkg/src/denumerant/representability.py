"""Which n have at least one partition into A, via the Apery set.

For coprime ``A`` with smallest part ``a``, ``apery[s]`` is the least
representable integer congruent to ``s`` mod ``a``. Then ``n`` is
representable iff ``n >= apery[n % a]``, and the Frobenius number (largest
non-representable integer) is ``max(apery) - a``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, inf

from .partset import NotCoprime, PartSet, as_part_set, reduce_by_gcd


@dataclass(frozen=True)
class FrobeniusResult:
    A: PartSet
    frobenius: int
    threshold: int
    apery: tuple[int, ...]


@lru_cache(maxsize=256)
def _apery(parts: tuple[int, ...]) -> tuple[int, ...]:
    # Round-robin relaxation: add one part at a time; residues mod a split
    # into gcd(a, b) cycles under "+b", and one lap around each cycle started
    # at its current minimum settles every entry on it.
    a = parts[0]
    best = [inf] * a
    best[0] = 0
    for b in parts[1:]:
        g = gcd(a, b)
        for p in range(g):
            n = min(best[q] for q in range(p, a, g))
            if n == inf:
                continue
            for _ in range(a // g - 1):
                n += b
                s = n % a
                n = min(n, best[s])
                best[s] = n
    return tuple(best)


def apery_set(A: PartSet) -> list[int]:
    A = as_part_set(A)
    if A.g != 1:
        raise NotCoprime(f"gcd{A.parts} = {A.g}: the Apery set is only complete for coprime parts")
    return list(_apery(A.parts))


def frobenius(A: PartSet) -> FrobeniusResult:
    """Largest non-representable integer, ``-1`` when ``1`` is a part."""
    A = as_part_set(A)
    if A.g != 1:
        raise NotCoprime(
            f"gcd{A.parts} = {A.g}: infinitely many integers are not representable, "
            "so no Frobenius number exists"
        )
    ap = _apery(A.parts)
    f = max(ap) - A.min
    return FrobeniusResult(A, f, f + 1, ap)


def is_representable(A: PartSet, n: int) -> bool:
    A = as_part_set(A)
    if n < 0:
        return False
    reduced, g = reduce_by_gcd(A)
    if n % g:
        return False
    n //= g
    ap = _apery(reduced.parts)
    return n >= ap[n % reduced.min]
