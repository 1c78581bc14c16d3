"""Derangement counts and forbidden-value avoidance for permutations."""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

MAX_ENUMERATION_R = 9  # 9! = 362880 permutations; beyond that we refuse


def derangements(r: int) -> int:
    """Number of permutations of r items with no fixed point.

    D_0 = 1, D_1 = 0, and D_r = (r-1)(D_(r-1) + D_(r-2)).
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r == 0:
        return 1
    prev2, prev1 = 1, 0  # D_0, D_1
    if r == 1:
        return 0
    for i in range(2, r + 1):
        prev2, prev1 = prev1, (i - 1) * (prev1 + prev2)
    return prev1


def forbidden_avoidance_count(forbidden: Sequence[int]) -> int:
    """Permutations sigma of 1..r with sigma(i) != forbidden[i] for every i.

    The forbidden values need not be distinct; each must lie in 1..r.
    Enumerates all r! permutations, so r is capped at 9.
    """
    r = len(forbidden)
    if r < 1:
        raise ValueError("need at least one forbidden value")
    if r > MAX_ENUMERATION_R:
        raise ValueError(f"r={r} exceeds the enumeration cap {MAX_ENUMERATION_R}")
    for v in forbidden:
        if not 1 <= v <= r:
            raise ValueError(f"forbidden value {v} outside 1..{r}")
    fv = tuple(forbidden)
    return sum(
        1
        for sigma in permutations(range(1, r + 1))
        if all(s != v for s, v in zip(sigma, fv))
    )
