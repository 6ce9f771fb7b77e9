"""Subsets of a ground set ``{0, ..., n-1}`` stored as Python ints."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

MAX_GROUND = 64


def popcount(mask: int) -> int:
    return mask.bit_count()


def bits(mask: int) -> Iterator[int]:
    """Positions of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def full_mask(n: int) -> int:
    return (1 << n) - 1


def complement(mask: int, n: int) -> int:
    return full_mask(n) & ~mask


def check_mask(mask: int, n: int) -> None:
    if mask < 0 or mask >> n:
        raise ValueError(f"mask {mask:#x} has bits outside the ground set of size {n}")


def to_bitstring(mask: int, n: int) -> str:
    """Position 0 is the leftmost character."""
    return "".join("1" if (mask >> i) & 1 else "0" for i in range(n))


def from_bitstring(s: str) -> int:
    s = s.strip()
    if any(c not in "01" for c in s):
        raise ValueError(f"not a bit string: {s!r}")
    return mask_of(i for i, c in enumerate(s) if c == "1")


def subsets_of_size(n: int, k: int) -> Iterator[int]:
    """All k-subsets of range(n) in increasing integer order (Gosper's hack)."""
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    x = (1 << k) - 1
    limit = 1 << n
    while x < limit:
        yield x
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r


def all_subsets(n: int) -> range:
    return range(1 << n)
