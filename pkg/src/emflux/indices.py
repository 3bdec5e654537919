"""Ordered index lists over a (k,n) metric signature.

Indices are dense integers 0..d-1 with the temporal block first: indices
0..k-1 carry metric -1, indices k..d-1 carry +1.  Basis blades are stored
as strictly increasing tuples, and every module shares the lexicographic
coefficient order produced by :func:`enumerate_grade`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

__all__ = [
    "Signature",
    "sigma",
    "epsilon",
    "complement",
    "metric_delta",
    "enumerate_grade",
    "blade_index",
]


@dataclass(frozen=True)
class Signature:
    """k temporal and n spatial dimensions of a flat space-time."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if self.k < 0 or self.n < 0 or self.k + self.n < 1:
            raise ValueError(f"invalid signature ({self.k},{self.n})")

    @property
    def d(self) -> int:
        return self.k + self.n

    def delta(self, i: int) -> int:
        """Metric of the basis vector e_i: -1 temporal, +1 spatial."""
        if not 0 <= i < self.d:
            raise ValueError(f"index {i} out of range for d={self.d}")
        return -1 if i < self.k else 1


def sigma(I, J) -> int:
    """Signature of the permutation sorting the concatenation (I, J).

    Returns 0 when the lists overlap.  Both inputs must be internally
    sorted ascending; computed by merge-counting inversions.
    """
    I = tuple(I)
    J = tuple(J)
    _check_sorted(I)
    _check_sorted(J)
    if (I and I[0] < 0) or (J and J[0] < 0):
        raise ValueError("negative space-time index")
    # Every element of J must hop over the larger elements of I.
    inversions = 0
    a = 0
    for j in J:
        while a < len(I) and I[a] < j:
            a += 1
        if a < len(I) and I[a] == j:
            return 0
        inversions += len(I) - a
    return -1 if inversions % 2 else 1


def epsilon(I, J) -> tuple:
    """Sorted merge of two disjoint sorted index lists."""
    I = tuple(I)
    J = tuple(J)
    if set(I) & set(J):
        raise ValueError(f"epsilon requires disjoint lists, got {I} and {J}")
    return tuple(sorted(I + J))


def complement(I, sig: Signature) -> tuple:
    """All indices of [0, d) not present in I, sorted."""
    inside = set(I)
    _check_range(I, sig.d)
    return tuple(i for i in range(sig.d) if i not in inside)


def metric_delta(I, sig: Signature) -> int:
    """Delta_II = product of the per-index metrics; +1 for the empty list."""
    _check_range(I, sig.d)
    out = 1
    for i in I:
        if i < sig.k:
            out = -out
    return out


def enumerate_grade(s: int, sig: Signature) -> tuple[tuple, ...]:
    """All C(d,s) strictly increasing index lists of length s, lexicographic."""
    return _enumerate_grade_cached(s, sig.k, sig.n)


@lru_cache(maxsize=None)
def _enumerate_grade_cached(s: int, k: int, n: int) -> tuple[tuple, ...]:
    d = k + n
    if not 0 <= s <= d:
        raise ValueError(f"grade {s} out of range for d={d}")
    return tuple(combinations(range(d), s))


def blade_index(I, sig: Signature) -> int:
    """Position of blade I in the canonical order of its grade."""
    return _blade_positions(len(I), sig.k, sig.n)[tuple(I)]


@lru_cache(maxsize=None)
def _blade_positions(s: int, k: int, n: int) -> dict:
    return {I: p for p, I in enumerate(_enumerate_grade_cached(s, k, n))}


def grade_size(s: int, sig: Signature) -> int:
    if not 0 <= s <= sig.d:
        raise ValueError(f"grade {s} out of range for d={sig.d}")
    return comb(sig.d, s)


def _check_sorted(I) -> None:
    for a, b in zip(I, I[1:]):
        if a >= b:
            raise ValueError(f"index list {I} is not strictly increasing")


def _check_range(I, d: int) -> None:
    for i in I:
        if not 0 <= i < d:
            raise ValueError(f"index {i} out of range for d={d}")
