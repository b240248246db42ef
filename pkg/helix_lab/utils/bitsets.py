"""Integer bitset helpers.

Vertex sets and ground-set subsets are stored as Python ints; bit ``i`` set
means element ``i`` is present. Ground-set elements ``1..m`` map to bits
``0..m-1``.
"""

from typing import Iterable, Iterator, Tuple


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest_bit(mask: int) -> int:
    """Position of the lowest set bit; ``-1`` for the empty mask."""
    return (mask & -mask).bit_length() - 1


def mask_of(positions: Iterable[int]) -> int:
    mask = 0
    for position in positions:
        mask |= 1 << position
    return mask


def subset_mask(elements: Iterable[int]) -> int:
    """Mask of a subset of the 1-based ground set ``{1..m}``."""
    return mask_of(element - 1 for element in elements)


def subset_elements(mask: int) -> Tuple[int, ...]:
    """Sorted 1-based elements of a ground-set mask."""
    return tuple(position + 1 for position in iter_bits(mask))


def full_mask(size: int) -> int:
    return (1 << size) - 1
