"""Bitmask helpers for vertex sets.

Vertex sets over a ground set {0, ..., n} are stored as Python ints:
bit v is set iff vertex v belongs to the set.  Collections of vertex
sets (tubings, nested sets) are frozensets of such masks.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bits of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> list[int]:
    return list(iter_bits(mask))


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def is_singleton(mask: int) -> bool:
    return mask != 0 and mask & (mask - 1) == 0


def sets_to_lists(sets: Iterable[int]) -> list[list[int]]:
    """Serialize a collection of masks as sorted lists of vertices."""
    return sorted(members(m) for m in sets)
