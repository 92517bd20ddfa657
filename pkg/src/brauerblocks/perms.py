"""Small permutation helpers shared by the algebra and module layers.

Permutations on m points are tuples of images, 0-based:
p[i] is the image of i.  compose(a, b) applies b first, then a.
"""

from __future__ import annotations

from itertools import permutations as _permutations
from typing import Iterator

from brauerblocks.partitions import Partition


def identity(m: int) -> tuple[int, ...]:
    return tuple(range(m))


def compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a[b[i]] for i in range(len(a)))


def inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def transposition(m: int, i: int, j: int) -> tuple[int, ...]:
    """The transposition swapping 0-based points i and j."""
    out = list(range(m))
    out[i], out[j] = out[j], out[i]
    return tuple(out)


def sign(p: tuple[int, ...]) -> int:
    seen = [False] * len(p)
    s = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def cycle_type(p: tuple[int, ...]) -> Partition:
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        lengths.append(length)
    return Partition(sorted(lengths, reverse=True))


def adjacent_word(p: tuple[int, ...]) -> list[int]:
    """A word in adjacent transpositions s_i = (i, i+1), 0-based i, with
    p = product of the s_i applied left to right as composed maps; bubble
    sort of the one-line form."""
    arr = list(p)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(arr) - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                word.append(i)
                changed = True
    # word applied to identity right-to-left rebuilds p
    word.reverse()
    return word


def all_perms(m: int) -> Iterator[tuple[int, ...]]:
    return _permutations(range(m))


def block_perms(blocks: list[list[int]], m: int) -> Iterator[tuple[int, ...]]:
    """All permutations of {0..m-1} preserving each block (Young subgroup)."""

    def rec(i: int, current: list[int]) -> Iterator[tuple[int, ...]]:
        if i == len(blocks):
            yield tuple(current)
            return
        block = blocks[i]
        for images in _permutations(block):
            for pos, img in zip(block, images):
                current[pos] = img
            yield from rec(i + 1, current)

    yield from rec(0, list(range(m)))


def row_blocks(lam: Partition) -> list[list[int]]:
    """Row-reading filling of lam: row i holds consecutive entries; the
    0-based entry blocks per row."""
    blocks, next_entry = [], 0
    for p in lam.parts:
        blocks.append(list(range(next_entry, next_entry + p)))
        next_entry += p
    return blocks


def col_blocks(lam: Partition) -> list[list[int]]:
    """Column blocks of the row-reading filling of lam (0-based entries)."""
    starts = []
    next_entry = 0
    for p in lam.parts:
        starts.append(next_entry)
        next_entry += p
    cols = []
    for c in range(lam.parts[0] if lam.parts else 0):
        col = [starts[i] + c for i, p in enumerate(lam.parts) if p > c]
        cols.append(col)
    return cols
