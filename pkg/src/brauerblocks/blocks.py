"""Block combinatorics for the diagram algebra at integral delta.

Two weights lie in the same block exactly when they form a balanced pair,
a condition on the contents of the two difference shapes around their
intersection.  This module decides balancedness, partitions a weight set
into blocks, builds the maximal balanced subpartition under a weight
(the predicted homomorphism target), classifies minimal weights by
iterated row/column stripping, and lays out the inclusion lattice of
weights between a balanced pair differing by isolated boxes.

Everything is exact integer combinatorics on partitions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache

from .partitions import (
    EMPTY,
    Box,
    Partition,
    SkewShape,
    partition_minus,
    partitions_of,
    removable_boxes,
    skew,
    subpartitions,
)


@dataclass(frozen=True)
class WeightSet:
    """The weights labelling cell modules at a given size: partitions of
    n, n-2, ... down to 1 or 0.  At delta = 0 the empty weight is omitted."""

    n: int
    delta: int
    weights: tuple[Partition, ...]


def weights(n: int, delta: int) -> WeightSet:
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Partition] = []
    for k in range(n, -1, -2):
        if k == 0 and delta == 0:
            continue
        out.extend(sorted(partitions_of(k), key=lambda p: p.parts))
    return WeightSet(n, delta, tuple(out))


def _side_balanced(boxes: frozenset[Box], delta: int) -> bool:
    counts = Counter(b.content for b in boxes)
    for c in counts:
        if counts[c] != counts[1 - delta - c]:
            return False
    if delta % 2 == 0:
        gamma = (2 - delta) // 2
        tops = [b for b in boxes if b.content == gamma]
        if tops:
            # content-gamma boxes sit on one diagonal, so the latest-row
            # box is the one with no gamma box in a greater column
            top = max(tops, key=lambda b: b.row)
            if Box(top.row + 1, top.col) in boxes and len(tops) % 2 != 0:
                return False
    else:
        if counts[(1 - delta) // 2] % 2 != 0:
            return False
    return True


@cache
def _balanced_cached(lam: Partition, mu: Partition, delta: int) -> bool:
    lam_side, mu_side = skew(lam, mu)
    return (_side_balanced(lam_side.boxes, delta)
            and _side_balanced(mu_side.boxes, delta))


def is_balanced(lam: Partition, mu: Partition, delta: int) -> bool:
    """Whether the two weights lie in the same block at this delta.

    Both difference shapes around the intersection must have a content
    multiset symmetric under c -> 1-delta-c, with an extra parity
    condition on the self-paired content.
    """
    if lam.parts > mu.parts:
        lam, mu = mu, lam
    return _balanced_cached(lam, mu, delta)


def bias(lam: Partition, tau: Partition, delta: int) -> int:
    """Content sum over the symmetric difference, recentred so that
    balanced pairs have bias zero."""
    lam_side, tau_side = skew(lam, tau)
    boxes = list(lam_side.boxes) + list(tau_side.boxes)
    if len(boxes) % 2 != 0:
        raise ValueError(
            f"symmetric difference of {lam} and {tau} has odd size {len(boxes)}"
        )
    t = len(boxes) // 2
    return sum(b.content for b in boxes) - t * (1 - delta)


@dataclass(frozen=True)
class BlockPartition:
    """Weights grouped into blocks, each with its unique minimal member."""

    n: int
    delta: int
    classes: tuple[tuple[Partition, tuple[Partition, ...]], ...]


def block_partition(n: int, delta: int) -> BlockPartition:
    """Partition the weight set by the balanced relation.

    Union-find over all pairs; every class must contain exactly one
    member of least size, which is attached as the class minimal.
    """
    ws = weights(n, delta).weights
    parent = list(range(len(ws)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(ws)):
        for j in range(i + 1, len(ws)):
            if is_balanced(ws[i], ws[j], delta):
                parent[find(i)] = find(j)

    groups: dict[int, list[Partition]] = {}
    for i, w in enumerate(ws):
        groups.setdefault(find(i), []).append(w)

    classes = []
    for members in groups.values():
        members.sort(key=lambda p: (p.size, p.parts))
        # balanced must be transitive for the block reading to make sense
        for a in members:
            for b in members:
                assert is_balanced(a, b, delta), (a, b, delta)
        least = [m for m in members if m.size == members[0].size]
        assert len(least) == 1, f"non-unique minimum in class {members}"
        classes.append((members[0], tuple(members)))
    classes.sort(key=lambda c: (c[0].size, c[0].parts))
    return BlockPartition(n, delta, tuple(classes))


def block_partition_json(bp: BlockPartition) -> dict:
    return {
        "n": bp.n,
        "delta": bp.delta,
        "blocks": [
            {
                "minimal": list(minimal.parts),
                "members": [list(m.parts) for m in members],
            }
            for minimal, members in bp.classes
        ],
    }


def _maximal_box(boxes) -> Box:
    """Latest box in the diagram order: boxes of one content share a
    diagonal, so the latest row is also the latest column."""
    return max(boxes, key=lambda b: b.row)


def _cone_close(current: set[Box], lam_boxes: frozenset[Box]) -> None:
    """Grow current with every box of lam to the right of or below a
    member, until stable."""
    frontier = list(current)
    while frontier:
        b = frontier.pop()
        for nb in (Box(b.row, b.col + 1), Box(b.row + 1, b.col)):
            if nb in lam_boxes and nb not in current:
                current.add(nb)
                frontier.append(nb)


def _imax_skew(lam: Partition, mu: Partition, delta: int, seed: Box) -> frozenset[Box]:
    """The removable skew grown from one seed box: cone closure inside
    lam alternating with content-partner completion from the difference
    shape, then a single parity repair when the self-paired content is
    left odd."""
    lam_boxes = lam.box_set()
    skew_boxes = frozenset(b for b in lam_boxes if b.col > mu.row(b.row - 1))
    if seed not in skew_boxes or seed not in removable_boxes(lam):
        raise ValueError(f"seed {seed} is not a removable box of {lam}/{mu}")

    partner_content = 1 - delta - seed.content
    partners = [b for b in skew_boxes
                if b.content == partner_content and b != seed]
    if not partners:
        raise ValueError(
            f"seed {seed} has no partner of content {partner_content} in {lam}/{mu}"
        )
    current: set[Box] = {seed, _maximal_box(partners)}

    def partner_pass() -> bool:
        counts = Counter(b.content for b in current)
        added = False
        for c in sorted(counts):
            cbar = 1 - delta - c
            if cbar == c:
                continue
            need = counts[c] - counts[cbar]
            if need <= 0:
                continue
            avail = sorted((b for b in skew_boxes - current if b.content == cbar),
                           key=lambda b: -b.row)
            if len(avail) < need:
                raise ValueError(
                    f"cannot complete content {cbar}: need {need}, "
                    f"have {len(avail)} in {lam}/{mu}"
                )
            current.update(avail[:need])
            added = True
        return added

    def close() -> None:
        while True:
            _cone_close(current, lam_boxes)
            if not partner_pass():
                break

    close()

    # one repair step when the stabilized skew still breaks the parity
    # condition on the self-paired content; fresh boxes come from all of
    # lam, not just the difference shape
    counts = Counter(b.content for b in current)
    if delta % 2 == 0:
        gamma = (2 - delta) // 2
        vertical = any(b.content == gamma and Box(b.row + 1, b.col) in current
                       for b in current)
        if vertical and counts[gamma] % 2 != 0:
            for c in (gamma, -delta // 2):
                fresh = [b for b in lam_boxes - current if b.content == c]
                if not fresh:
                    raise ValueError(f"no box of content {c} left in {lam}")
                current.add(_maximal_box(fresh))
            close()
    else:
        half = (1 - delta) // 2
        if counts[half] % 2 != 0:
            fresh = [b for b in lam_boxes - current if b.content == half]
            if not fresh:
                raise ValueError(f"no box of content {half} left in {lam}")
            current.add(_maximal_box(fresh))
            close()

    return frozenset(current)


def i_maximal_balanced_sub(lam: Partition, mu: Partition, delta: int,
                           seed: Box) -> Partition:
    """The balanced subpartition grown from one removable seed box of
    the difference shape lam/mu."""
    if not lam.contains(mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    grown = _imax_skew(lam, mu, delta, seed)
    result = partition_minus(lam, grown)
    assert result is not None, (lam, mu, seed, sorted(grown))
    assert is_balanced(lam, result, delta), (lam, result, delta)
    return result


def maximal_balanced_sub(lam: Partition, mu: Partition, delta: int) -> Partition:
    """The closest weight below lam in the direction of mu: grow a skew
    from every removable box of lam/mu, keep the inclusion-minimal
    results, and take the lexicographically least."""
    if not lam.contains(mu) or lam == mu:
        raise ValueError(f"{mu} must be properly contained in {lam}")
    skew_boxes = {b for b in lam.boxes() if b.col > mu.row(b.row - 1)}
    grown: list[frozenset[Box]] = []
    for seed in removable_boxes(lam):
        if seed not in skew_boxes:
            continue
        try:
            s = _imax_skew(lam, mu, delta, seed)
        except ValueError:
            continue  # unpartnered seed: no skew from here
        if s not in grown:
            grown.append(s)
    if not grown:
        raise ValueError(f"no removable box of {lam}/{mu} has a partner")
    minimal = [s for s in grown
               if not any(t < s for t in grown)]
    chosen = min(minimal, key=lambda s: sorted(s))
    result = partition_minus(lam, chosen)
    assert result is not None, (lam, mu, sorted(chosen))
    assert is_balanced(lam, result, delta), (lam, result, delta)
    return result


def hat_steps(lam: Partition, delta: int) -> tuple[SkewShape, list[tuple[str, list[int]]]]:
    """Strip rows and columns from lam until only a core shape remains.

    At each step the surviving removable box with content farthest from
    (1-delta)/2 is examined.  If any surviving box carries the mirror
    content the procedure stops; otherwise all rows above and including
    the examined box (content above centre) or all columns left of and
    including it (below centre) are discarded.  Returns the surviving
    boxes and the removal log.
    """
    r0, c0 = 0, 0
    steps: list[tuple[str, list[int]]] = []
    remo = removable_boxes(lam)
    all_boxes = lam.box_set()
    while True:
        alive = [b for b in remo if b.row > r0 and b.col > c0]
        if not alive:
            break
        region = [b for b in all_boxes if b.row > r0 and b.col > c0]

        # compare doubled distances to the centre to stay in integers
        def dist(b: Box) -> int:
            return abs(2 * b.content - (1 - delta))

        def partnered(b: Box) -> bool:
            want = 1 - delta - b.content
            return any(o.content == want and o != b for o in region)

        best = max(dist(b) for b in alive)
        candidates = [b for b in alive if dist(b) == best]
        free = [b for b in candidates if not partnered(b)]
        if not free:
            break
        eps = min(free)
        if 2 * eps.content - (1 - delta) > 0:
            steps.append(("rows", list(range(r0 + 1, eps.row + 1))))
            r0 = eps.row
        elif 2 * eps.content - (1 - delta) < 0:
            steps.append(("cols", list(range(c0 + 1, eps.col + 1))))
            c0 = eps.col
        else:
            break  # centred and unpartnered: nothing forces a strip
    core = SkewShape(b for b in lam.boxes() if b.row > r0 and b.col > c0)
    return core, steps


def hat(lam: Partition, delta: int) -> SkewShape:
    return hat_steps(lam, delta)[0]


def is_minimal(lam: Partition, delta: int) -> bool:
    """Whether lam is the smallest weight in its block.

    The stripped core confines the search: lam is reported minimal
    exactly when no smaller weight balanced with lam differs from it
    only inside the core.  Rows and columns are only ever stripped when
    their removable corner has no mirror-content box left at all, so
    no balanced removal can straddle the discarded part.
    """
    core = hat(lam, delta).boxes
    if not core:
        return True
    r0 = min(b.row for b in core) - 1
    c0 = min(b.col for b in core) - 1

    def rec(i: int, prev: int, acc: list[int]):
        if i == lam.rows:
            yield Partition(acc)
            return
        if i < r0 or lam.row(i) <= c0:
            yield from rec(i + 1, lam.row(i), acc + [lam.row(i)])
            return
        for length in range(min(lam.row(i), prev), c0 - 1, -1):
            yield from rec(i + 1, length, acc + [length])

    for mu in rec(0, lam.row(0) if lam.rows else 0, []):
        if mu == lam or (delta == 0 and mu == EMPTY):
            continue
        if is_balanced(lam, mu, delta):
            return False
    return True


def minimal_weight(lam: Partition, delta: int) -> Partition:
    """The unique smallest partition under lam balanced with it."""
    candidates = [mu for mu in subpartitions(lam)
                  if not (delta == 0 and mu == EMPTY and lam != EMPTY)
                  and is_balanced(lam, mu, delta)]
    least = min(m.size for m in candidates)
    found = [m for m in candidates if m.size == least]
    assert len(found) == 1, f"non-unique minimum below {lam}: {found}"
    assert is_minimal(found[0], delta), (lam, found[0], delta)
    return found[0]


def hom_target(lam: Partition, delta: int) -> Partition | None:
    """The predicted receiver of a nonzero map out of the cell module
    at lam, or None when lam is minimal in its block."""
    if is_minimal(lam, delta):
        return None
    return maximal_balanced_sub(lam, minimal_weight(lam, delta), delta)


@dataclass(frozen=True)
class LatticePrediction:
    """The predicted submodule lattice between a balanced pair whose
    difference is 2m isolated boxes: one node per subset of the m
    mirrored box pairs, ordered by inclusion."""

    m: int
    pairs: tuple[tuple[Box, Box], ...]
    nodes: dict[frozenset[int], Partition]
    covers: tuple[tuple[frozenset[int], frozenset[int]], ...]


def lattice_predict(lam: Partition, mu: Partition, delta: int) -> LatticePrediction:
    if not lam.contains(mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    boxes = sorted(b for b in lam.boxes() if b.col > mu.row(b.row - 1))
    box_set = set(boxes)
    for b in boxes:
        for nb in (Box(b.row, b.col + 1), Box(b.row, b.col - 1),
                   Box(b.row + 1, b.col), Box(b.row - 1, b.col)):
            if nb in box_set:
                raise ValueError(f"{lam}/{mu} has adjacent boxes {b}, {nb}")
    if len(boxes) % 2 != 0:
        raise ValueError(f"{lam}/{mu} has an odd number of boxes")

    unused = sorted(boxes, key=lambda b: (-b.content, -b.row))
    pairs: list[tuple[Box, Box]] = []
    while unused:
        first = unused.pop(0)
        want = 1 - delta - first.content
        match = next((b for b in unused if b.content == want), None)
        if match is None:
            raise ValueError(
                f"box {first} has no partner of content {want} in {lam}/{mu}"
            )
        unused.remove(match)
        pairs.append((first, match))

    m = len(pairs)
    nodes: dict[frozenset[int], Partition] = {}
    for mask in range(1 << m):
        x = frozenset(i + 1 for i in range(m) if mask >> i & 1)
        removed = [b for i in x for b in pairs[i - 1]]
        node = partition_minus(lam, removed)
        if node is None:
            raise ValueError(f"removing pairs {sorted(x)} of {pairs} "
                             f"does not leave a partition")
        nodes[x] = node
    covers = tuple(
        (x, x | {j})
        for x in nodes
        for j in range(1, m + 1)
        if j not in x
    )
    return LatticePrediction(m, tuple(pairs), nodes, covers)
