"""Young-diagram combinatorics: partitions, boxes, contents, charges,
skew shapes, Littlewood-Richardson coefficients by box addition,
standard-tableau counting, and symmetric-group characters.

Everything here is pure and exact; partitions are immutable values.
"""

from __future__ import annotations

from collections import Counter
from functools import cache
from math import factorial
from typing import Iterable, Iterator, NamedTuple


class Box(NamedTuple):
    """A box of a Young diagram at (row, col), both 1-based, top-left origin."""

    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row

    def charge(self, delta: int) -> int:
        return delta - 1 + 2 * self.content


class Partition:
    """A partition: weakly decreasing positive parts; () is the empty partition."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(int(p) for p in parts if p != 0)
        for a, b in zip(ps, ps[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {ps}")
        if ps and ps[-1] < 0:
            raise ValueError(f"negative part in {ps}")
        object.__setattr__(self, "parts", ps)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    def row(self, i: int) -> int:
        """Length of 0-based row i, 0 beyond the last row."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __le__(self, other: "Partition") -> bool:
        return self.parts <= other.parts

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def __str__(self) -> str:
        return format_partition(self)

    def contains(self, other: "Partition") -> bool:
        """Rowwise containment: other fits inside self."""
        return all(other.row(i) <= self.row(i) for i in range(other.rows))

    def intersect(self, other: "Partition") -> "Partition":
        """Rowwise minimum, the largest partition inside both."""
        return Partition(min(a, b) for a, b in zip(self.parts, other.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(
            sum(1 for p in self.parts if p > c) for c in range(self.parts[0])
        )

    def boxes(self) -> Iterator[Box]:
        for i, p in enumerate(self.parts):
            for j in range(p):
                yield Box(i + 1, j + 1)

    def box_set(self) -> frozenset[Box]:
        return frozenset(self.boxes())

    def add_box(self, box: Box) -> "Partition":
        lengths = list(self.parts)
        while len(lengths) < box.row:
            lengths.append(0)
        if lengths[box.row - 1] + 1 != box.col:
            raise ValueError(f"{box} is not addable to {self}")
        lengths[box.row - 1] += 1
        return Partition(lengths)

    def remove_box(self, box: Box) -> "Partition":
        if self.row(box.row - 1) != box.col:
            raise ValueError(f"{box} is not removable from {self}")
        lengths = list(self.parts)
        lengths[box.row - 1] -= 1
        return Partition(lengths)


EMPTY = Partition()


def parse_partition(text: str) -> Partition:
    """Parse "6,4,4,2,1"; the literal "0" denotes the empty partition."""
    text = text.strip()
    if text == "0":
        return EMPTY
    try:
        parts = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise ValueError(f"bad partition literal {text!r}") from exc
    if any(p <= 0 for p in parts):
        raise ValueError(f"bad partition literal {text!r}")
    return Partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam.parts) if lam.parts else "0"


class SkewShape:
    """A set of boxes with absolute (row, col) coordinates in some ambient
    diagram.  Coordinates are never re-normalized: contents and column
    positions of the boxes are meaningful."""

    __slots__ = ("boxes",)

    def __init__(self, boxes: Iterable[Box] = ()):
        object.__setattr__(self, "boxes", frozenset(boxes))

    def __setattr__(self, name, value):
        raise AttributeError("SkewShape is immutable")

    def __len__(self) -> int:
        return len(self.boxes)

    def __iter__(self) -> Iterator[Box]:
        return iter(self.sorted_boxes())

    def __contains__(self, box: Box) -> bool:
        return box in self.boxes

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewShape) and self.boxes == other.boxes

    def __hash__(self) -> int:
        return hash(self.boxes)

    def __repr__(self) -> str:
        return f"SkewShape({self.sorted_boxes()})"

    def sorted_boxes(self) -> list[Box]:
        return sorted(self.boxes)

    def contents(self) -> Counter:
        return Counter(b.content for b in self.boxes)

    def row_lengths(self) -> dict[int, int]:
        out: Counter = Counter()
        for b in self.boxes:
            out[b.row] += 1
        return dict(out)


def contents(lam: Partition) -> Counter:
    """Multiset of box contents col - row over the whole diagram."""
    return Counter(b.content for b in lam.boxes())


def addable_boxes(lam: Partition) -> list[Box]:
    """Positions whose addition leaves a partition, sorted by content."""
    out = [Box(i + 1, lam.row(i) + 1)
           for i in range(lam.rows + 1)
           if i == 0 or lam.row(i) < lam.row(i - 1)]
    return sorted(out, key=lambda b: b.content)


def removable_boxes(lam: Partition) -> list[Box]:
    """Positions whose removal leaves a partition, sorted by content."""
    out = [Box(i + 1, lam.row(i))
           for i in range(lam.rows)
           if lam.row(i) > lam.row(i + 1)]
    return sorted(out, key=lambda b: b.content)


def skew(lam: Partition, mu: Partition) -> tuple[SkewShape, SkewShape]:
    """The two difference shapes of lam and mu around their rowwise
    intersection.  Containment is not required."""
    inter = lam.intersect(mu)
    inter_boxes = inter.box_set()
    lam_side = SkewShape(b for b in lam.boxes() if b not in inter_boxes)
    mu_side = SkewShape(b for b in mu.boxes() if b not in inter_boxes)
    return lam_side, mu_side


def partition_minus(lam: Partition, boxes: Iterable[Box]) -> Partition | None:
    """lam with the given boxes deleted, or None if the rest is not a
    partition shape (a deleted box must be a row suffix)."""
    drop: Counter = Counter()
    box_list = list(boxes)
    for b in box_list:
        drop[b.row] += 1
    lengths = [lam.row(i) - drop.get(i + 1, 0) for i in range(lam.rows)]
    # the deleted boxes must exactly fill the removed suffixes
    expected = set()
    for i, new_len in enumerate(lengths):
        for c in range(new_len + 1, lam.row(i) + 1):
            expected.add(Box(i + 1, c))
    if expected != set(box_list) or len(box_list) != len(set(box_list)):
        return None
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        return None
    if any(l < 0 for l in lengths):
        return None
    return Partition(lengths)


def is_even(eta: Partition) -> bool:
    """True iff every part is even (vacuously true for the empty partition)."""
    return all(p % 2 == 0 for p in eta.parts)


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients by brute-force box addition.
#
# c^lam_{mu,eta} counts chains mu = nu^0 < nu^1 < ... < nu^r = lam where
# step i adds a horizontal strip of eta_i boxes (distinct columns), the
# strip's boxes are labelled right to left, and for every label position j
# the rows of the j-th boxes strictly increase from one strip to the next.


def _horizontal_strips(nu: Partition, k: int, lam: Partition) -> Iterator[Partition]:
    """All partitions nu' with nu <= nu' <= lam, |nu'/nu| = k and nu'/nu a
    horizontal strip (nu'_{i+1} <= nu_i)."""
    rows = max(nu.rows + 1, 1)

    def rec(i: int, remaining: int, acc: list[int]) -> Iterator[list[int]]:
        if i == rows:
            if remaining == 0:
                yield acc
            return
        lo = nu.row(i)
        hi = min(lam.row(i), lo + remaining)
        if i > 0:
            # partition shape below the previous new row, at most one new
            # box per column
            hi = min(hi, acc[i - 1], nu.row(i - 1))
        for new_len in range(lo, hi + 1):
            yield from rec(i + 1, remaining - (new_len - lo), acc + [new_len])

    for lengths in rec(0, k, []):
        yield Partition(lengths)


def _strip_rows(nu: Partition, nu2: Partition) -> list[int]:
    """Rows of nu2/nu boxes listed by decreasing column (label order)."""
    boxes = []
    for i in range(nu2.rows):
        for c in range(nu.row(i) + 1, nu2.row(i) + 1):
            boxes.append(Box(i + 1, c))
    boxes.sort(key=lambda b: -b.col)
    return [b.row for b in boxes]


def lr_coefficient(mu: Partition, eta: Partition, lam: Partition) -> int:
    """The Littlewood-Richardson coefficient for adding eta to mu to get lam,
    by direct enumeration of valid box-addition sequences."""
    if mu.size + eta.size != lam.size or not lam.contains(mu):
        return 0
    if eta.size == 0:
        return 1 if mu == lam else 0

    count = 0

    def rec(current: Partition, i: int, prev_rows: list[int]) -> None:
        nonlocal count
        if i == eta.rows:
            if current == lam:
                count += 1
            return
        k = eta[i]
        for nxt in _horizontal_strips(current, k, lam):
            rows = _strip_rows(current, nxt)
            # label position j: its row must strictly increase strip to strip
            if all(prev_rows[j] < rows[j] for j in range(k if prev_rows else 0)):
                rec(nxt, i + 1, rows)

    rec(mu, 0, [])
    return count


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, largest part first, in lexicographic descent."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """All partitions contained rowwise in lam (including empty and lam)."""

    def rec(i: int, prev: int, acc: list[int]) -> Iterator[Partition]:
        if i == lam.rows:
            yield Partition(acc)
            return
        for length in range(min(lam.row(i), prev), -1, -1):
            yield from rec(i + 1, length, acc + [length])

    yield from rec(0, lam.row(0) if lam.rows else 0, [])


def unique_rectangle_eta(mu: Partition, lam: Partition) -> Partition | None:
    """For a rectangle lam containing mu, the unique eta with a nonzero
    LR coefficient: the nonzero skew row lengths reversed.  None when the
    skew is empty."""
    if lam.rows and any(p != lam[0] for p in lam.parts):
        raise ValueError(f"{lam} is not a rectangle")
    if not lam.contains(mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    if mu.size == lam.size:
        return None
    skew_rows = [lam.row(i) - mu.row(i) for i in range(lam.rows)]
    eta = Partition(sorted((r for r in skew_rows if r), reverse=True))
    # the skew rows, read bottom to top, must already be the parts of eta
    assert [r for r in reversed(skew_rows) if r] == list(eta.parts)
    assert lr_coefficient(mu, eta, lam) == 1
    return eta


# ---------------------------------------------------------------------------
# Standard tableaux and characters.


def standard_tableaux(lam: Partition) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All standard tableaux of shape lam as tuples of row tuples."""
    n = lam.size
    if n == 0:
        yield ()
        return
    shape = lam.parts
    rows = [[0] * p for p in shape]
    filled = [0] * len(shape)

    def rec(k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if k > n:
            yield tuple(tuple(r) for r in rows)
            return
        for i in range(len(shape)):
            j = filled[i]
            if j < shape[i] and (i == 0 or filled[i - 1] > j):
                rows[i][j] = k
                filled[i] += 1
                yield from rec(k + 1)
                filled[i] -= 1
        return

    yield from rec(1)


@cache
def specht_dim(lam: Partition) -> int:
    """Number of standard tableaux of shape lam, by the hook-length product."""
    n = lam.size
    if n == 0:
        return 1
    conj = lam.conjugate()
    num = factorial(n)
    for i, p in enumerate(lam.parts):
        for j in range(p):
            hook = (p - j) + (conj[j] - i) - 1
            num //= hook
    return num


def _border_strip_removals(lam: Partition, length: int) -> Iterator[tuple[Partition, int]]:
    """All ways to remove a border strip of the given length; yields the
    remaining partition and the strip height minus one (the sign exponent).
    Works on first-column hook lengths (beta numbers): a strip removal is a
    move b -> b - length to an unoccupied value."""
    k = lam.rows
    beta = [lam.row(i) + (k - 1 - i) for i in range(k)]
    occupied = set(beta)
    for b in beta:
        nb = b - length
        if nb < 0 or nb in occupied:
            continue
        crossed = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((occupied - {b}) | {nb}, reverse=True)
        parts = [new_beta[i] - (k - 1 - i) for i in range(k)]
        yield Partition(parts), crossed


@cache
def _mn(lam: Partition, rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    total = 0
    for rest, height in _border_strip_removals(lam, rho[0]):
        total += (-1) ** height * _mn(rest, rho[1:])
    return total


def mn_character(lam: Partition, cycle_type: Partition) -> int:
    """Irreducible symmetric-group character of shape lam at a class, via
    the Murnaghan-Nakayama recursion."""
    if lam.size != cycle_type.size:
        raise ValueError(f"size mismatch: {lam} vs {cycle_type}")
    return _mn(lam, cycle_type.parts)


def conjugacy_class_size(rho: Partition) -> int:
    """Number of permutations with the given cycle type."""
    counts = Counter(rho.parts)
    z = 1
    for part, m in counts.items():
        z *= part ** m * factorial(m)
    return factorial(rho.size) // z
