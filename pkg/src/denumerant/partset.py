"""Finite part sets, gcd reduction and the inductive split.

A part set is stored as a strictly increasing tuple of positive integers.
The split removes one distinguished part ``a_k`` (the largest by default),
takes ``d = gcd`` of what is left and divides the remainder by ``d``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable


class PartitionError(ValueError):
    """Base class for all domain errors raised by this package."""


class EmptySet(PartitionError):
    pass


class NonPositivePart(PartitionError):
    pass


class NeedsTwoParts(PartitionError):
    pass


class NotCoprime(PartitionError):
    pass


@dataclass(frozen=True)
class PartSet:
    """Canonical finite set of positive integer parts.

    ``k`` and ``g`` (cardinality and gcd) are derived on construction.
    ``dropped`` counts duplicates removed by :func:`make_part_set`; it is a
    diagnostic only and does not take part in equality or hashing.
    """

    parts: tuple[int, ...]
    k: int = field(init=False)
    g: int = field(init=False)
    dropped: int = field(default=0, compare=False, repr=False)

    def __post_init__(self):
        parts = tuple(int(a) for a in self.parts)
        if not parts:
            raise EmptySet("a part set needs at least one part")
        bad = [a for a in parts if a <= 0]
        if bad:
            raise NonPositivePart(f"parts must be positive integers, got {bad}")
        if any(x >= y for x, y in zip(parts, parts[1:])):
            raise ValueError(f"parts must be strictly increasing, got {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "k", len(parts))
        object.__setattr__(self, "g", gcd(*parts))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return self.k

    def __contains__(self, a):
        return a in self.parts

    @property
    def min(self) -> int:
        return self.parts[0]

    @property
    def max(self) -> int:
        return self.parts[-1]

    def scaled(self, g: int) -> "PartSet":
        return PartSet(tuple(g * a for a in self.parts))


@dataclass(frozen=True)
class NathansonSplit:
    """Reduction data: ``A = {d * a' for a' in A_prime} | {a_k}``."""

    d: int
    a_k: int
    A_prime: PartSet


def make_part_set(raw: Iterable[int]) -> PartSet:
    """Build a :class:`PartSet` from any iterable of integers.

    Duplicates are removed and the parts sorted. Zero or negative entries
    raise :class:`NonPositivePart` rather than being filtered out.

    >>> make_part_set([2, 2, 4])
    PartSet(parts=(2, 4), k=2, g=2)
    """
    raw = [int(a) for a in raw]
    if not raw:
        raise EmptySet("a part set needs at least one part")
    bad = [a for a in raw if a <= 0]
    if bad:
        raise NonPositivePart(f"parts must be positive integers, got {bad}")
    parts = tuple(sorted(set(raw)))
    return PartSet(parts, dropped=len(raw) - len(parts))


def as_part_set(A) -> PartSet:
    return A if isinstance(A, PartSet) else make_part_set(A)


def reduce_by_gcd(A: PartSet) -> tuple[PartSet, int]:
    """Divide every part by the gcd; returns ``(reduced, g)``."""
    A = as_part_set(A)
    if A.g == 1:
        return A, 1
    return PartSet(tuple(a // A.g for a in A.parts)), A.g


def require_coprime(A: PartSet) -> None:
    if A.g != 1:
        raise NotCoprime(f"gcd{A.parts} = {A.g}, expected 1")


def split(A: PartSet, index: int = -1) -> NathansonSplit:
    """Remove the part at ``index`` and rescale the rest by their gcd.

    The default ``index=-1`` picks the largest part, which keeps the number
    of residue classes ``floor(m / a_k)`` as small as possible. Any index is
    valid for a coprime set; it is taken modulo ``k``.
    """
    A = as_part_set(A)
    if A.k < 2:
        raise NeedsTwoParts(f"split needs at least two parts, got {A.parts}")
    require_coprime(A)
    i = index % A.k
    a_k = A.parts[i]
    rest = A.parts[:i] + A.parts[i + 1:]
    d = gcd(*rest)
    return NathansonSplit(d=d, a_k=a_k, A_prime=PartSet(tuple(a // d for a in rest)))
