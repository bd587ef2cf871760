"""Partitions and dominant integer weights, represented as plain tuples.

A partition is a normalized tuple of non-increasing positive integers
(trailing zeros are stripped, so ``(3, 1, 0)`` and ``(3, 1)`` are the same
partition).  A dominant weight of rank n is a non-increasing tuple of
exactly n integers, negative entries allowed.  Everything here is pure and
immutable.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from math import comb

Partition = tuple[int, ...]
Weight = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Normalize a partition, stripping trailing zeros.

    >>> partition([3, 1, 0])
    (3, 1)
    """
    t = tuple(int(a) for a in parts)
    for i in range(len(t) - 1):
        if t[i] < t[i + 1]:
            raise ValueError(f"parts are not non-increasing: {t}")
    if t and t[-1] < 0:
        raise ValueError(f"negative part in partition: {t}")
    n = len(t)
    while n and t[n - 1] == 0:
        n -= 1
    return t[:n]


def weight(entries: Iterable[int], rank: int | None = None) -> Weight:
    """Validate a dominant weight; with ``rank`` given, pad/check its length.

    Padding appends zeros, which is only legal while the result stays
    non-increasing (i.e. the last entry is >= 0).
    """
    t = tuple(int(a) for a in entries)
    for i in range(len(t) - 1):
        if t[i] < t[i + 1]:
            raise ValueError(f"entries are not non-increasing: {t}")
    if rank is not None:
        if len(t) > rank:
            raise ValueError(f"weight {t} has more than {rank} entries")
        if len(t) < rank:
            if t and t[-1] < 0:
                raise ValueError(f"cannot zero-pad {t} to rank {rank}")
            t = t + (0,) * (rank - len(t))
    return t


def size(z: Iterable[int]) -> int:
    """Sum of the entries."""
    return sum(z)


def padded(z: Iterable[int], length: int) -> tuple[int, ...]:
    """Pad with zeros on the right (or drop trailing zeros) to `length`."""
    t = tuple(z)
    if len(t) > length:
        if any(t[length:]):
            raise ValueError(f"{t} does not fit in {length} parts")
        return t[:length]
    return t + (0,) * (length - len(t))


def conjugate(z: Iterable[int]) -> Partition:
    """Transpose of the Young diagram.

    >>> conjugate((3, 1))
    (2, 1, 1)
    """
    z = partition(z)
    if not z:
        return ()
    return tuple(sum(1 for a in z if a >= i) for i in range(1, z[0] + 1))


def dual(w: Iterable[int]) -> Weight:
    """The dual weight: dual(w)_i = -w_{n+1-i}.  An involution."""
    return tuple(-a for a in reversed(tuple(w)))


def doubled(z: Iterable[int]) -> Partition:
    """Multiply every part by two: (z1, z2, ...) -> (2*z1, 2*z2, ...)."""
    return tuple(2 * a for a in partition(z))


def duplicated(z: Iterable[int]) -> Partition:
    """Repeat every part twice: (z1, z2, ...) -> (z1, z1, z2, z2, ...)."""
    return tuple(a for a in partition(z) for _ in (0, 1))


def complement_in_box(z: Iterable[int], rows: int, width: int) -> Partition:
    """Complement of the Young diagram inside a rows x width rectangle.

    An involution on partitions fitting the box; part i of the result is
    width - z_{rows+1-i}.
    """
    z = partition(z)
    p = padded(z, rows)
    if p and p[0] > width:
        raise ValueError(f"{z} does not fit in a {rows}x{width} box")
    return partition(width - p[rows - 1 - i] for i in range(rows))


def dominates(y: Iterable[int], z: Iterable[int]) -> bool:
    """Componentwise y_i >= z_i, padding the shorter with zeros."""
    y, z = tuple(y), tuple(z)
    length = max(len(y), len(z))
    y = y + (0,) * (length - len(y))
    z = z + (0,) * (length - len(z))
    return all(a >= b for a, b in zip(y, z))


def enumerate_box(rows: int, width: int) -> Iterator[Partition]:
    """All partitions with at most `rows` parts, each at most `width`.

    Lexicographically descending; yields comb(rows+width, rows) partitions.
    """
    if rows < 0 or width < 0:
        raise ValueError("box dimensions must be non-negative")
    if rows == 0 or width == 0:
        yield ()
        return
    for first in range(width, 0, -1):
        for rest in enumerate_box(rows - 1, first):
            yield (first,) + rest
    yield ()


def box_count(rows: int, width: int) -> int:
    """Number of partitions in the rows x width box."""
    return comb(rows + width, rows)


def partitions_of_size(total: int, max_parts: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of `total` with at most `max_parts` parts, each at most
    `max_part` (unbounded when None)."""
    if total < 0:
        return
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    first_cap = total if max_part is None else min(total, max_part)
    for first in range(first_cap, 0, -1):
        for rest in partitions_of_size(total - first, max_parts - 1, first):
            yield (first,) + rest


def enumerate_weights(rank: int, lo: int, hi: int) -> Iterator[Weight]:
    """All dominant weights of the given rank with entries in [lo, hi]."""
    if rank < 0 or lo > hi:
        return
    if rank == 0:
        yield ()
        return
    for first in range(hi, lo - 1, -1):
        for rest in enumerate_weights(rank - 1, lo, first):
            yield (first,) + rest
