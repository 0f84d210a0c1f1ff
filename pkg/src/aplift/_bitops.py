"""Bit-twiddling helpers. Bitmaps are plain Python ints, bit i = position i."""

from __future__ import annotations

from typing import Iterator


def lsb_index(bits: int) -> int:
    """Index of the lowest set bit. Caller guarantees bits != 0."""
    return (bits & -bits).bit_length() - 1


def iter_bit_indices(bits: int) -> Iterator[int]:
    """Yield indices of set bits in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def run_starts(bits: int, n: int) -> int:
    """Bitmap of the positions where a run of n consecutive set bits begins.

    Uses shift-and-intersect doubling, so cost grows with log(n) big-int ops.
    """
    if n < 1:
        raise ValueError("run length must be >= 1")
    have = 1
    v = bits
    while have < n and v:
        step = min(have, n - have)
        v &= v >> step
        have += step
    return v


def smear_right(bits: int, n: int) -> int:
    """OR of bits >> j for all j in [0, n]."""
    covered = 0
    v = bits
    while covered < n:
        step = min(covered + 1, n - covered)
        v |= v >> step
        covered += step
    return v


def longest_run(bits: int) -> int:
    """Length of the longest run of consecutive set bits."""
    n = 0
    while bits:
        bits &= bits >> 1
        n += 1
    return n
