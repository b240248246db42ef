"""2-stable subsets of the cyclically ordered ground set ``{1..m}``.

A set is 2-stable when no two of its elements are cyclically consecutive,
i.e. ``2 <= |x - y| <= m - 2`` for distinct elements. Sets are bit masks
with element ``x`` stored at bit ``x - 1``.
"""

from functools import lru_cache
from typing import List, Tuple

from ..utils.bitsets import full_mask, popcount


def is_two_stable(mask: int, m: int) -> bool:
    if popcount(mask) <= 1:
        return True
    rotated = ((mask << 1) | (mask >> (m - 1))) & full_mask(m)
    return mask & rotated == 0


@lru_cache(maxsize=None)
def stable_subsets(m: int, n: int) -> Tuple[int, ...]:
    """All 2-stable ``n``-subsets of ``{1..m}`` in lexicographic order.

    Built by choosing gaps directly, never by filtering all ``n``-subsets.
    """
    result: List[int] = []

    def extend(start: int, remaining: int, mask: int, last_allowed: int) -> None:
        if remaining == 0:
            result.append(mask)
            return
        # leave room for the remaining elements, two apart
        stop = last_allowed - 2 * (remaining - 1)
        for x in range(start, stop + 1):
            extend(x + 2, remaining - 1, mask | (1 << (x - 1)), last_allowed)

    if n == 0:
        return (0,)
    for first in range(1, m + 1):
        # a set containing 1 may not contain m
        last_allowed = m - 1 if first == 1 and m > 1 else m
        if n == 1:
            last_allowed = m
        stop = last_allowed - 2 * (n - 1)
        if first > stop:
            continue
        extend(first + 2, n - 1, 1 << (first - 1), last_allowed)
    return tuple(result)


@lru_cache(maxsize=None)
def _stable_union_cached(mask: int, m: int, n: int) -> bool:
    covered = 0
    for stable in stable_subsets(m, n):
        if stable & ~mask == 0:
            covered |= stable
            if covered == mask:
                return True
    return covered == mask


def is_stable_union(mask: int, m: int, n: int) -> bool:
    """True iff ``mask`` is a union of 2-stable ``n``-subsets of ``{1..m}``.

    The empty set is the empty union.
    """
    if mask == 0:
        return True
    if popcount(mask) < n:
        return False
    return _stable_union_cached(mask, m, n)


def complement_is_stable_union(mask: int, m: int, n: int) -> bool:
    return is_stable_union(full_mask(m) & ~mask, m, n)
