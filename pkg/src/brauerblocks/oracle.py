"""Brute-force verification layer.

Everything here recomputes, by exact linear algebra, quantities that the
combinatorial layer only predicts: Hom-space dimensions between cell
modules, central-element scalars, Gram ranks, restriction multiplicities
to the symmetric group, and the empirical block graph.  All arithmetic
is over exact rationals; a rank decision is only as good as its worst
pivot.

Module dimensions are capped via the BRAUER_MAX_DIM environment variable
(default 400) so that a stray query cannot wedge a test run.  Raise it
explicitly for big one-off computations.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import perms
from .blocks import (WeightSet, block_partition, hom_target, is_balanced,
                     is_minimal, weights)
from .cells import CellModule, build_cell, gram_matrix
from .diagrams import BrauerDiagram, central_element, perm_diagram
from .linalg import Echelon, SparseVec, nullspace_dim, rank_of, vec_add
from .partitions import (Partition, contents, conjugacy_class_size, is_even,
                         lr_coefficient, mn_character, partitions_of)

DEFAULT_MAX_DIM = 400

# Unknown-count ceiling for the full intertwiner solve; beyond this the
# elimination is no longer desk-scale.
GENERIC_UNKNOWN_CAP = 200_000


def _max_dim() -> int:
    return int(os.environ.get("BRAUER_MAX_DIM", DEFAULT_MAX_DIM))


def cell_dim(n: int, mu: Partition) -> int:
    """Dimension of the cell module at weight mu, without building it."""
    t = (n - mu.size) // 2
    v_count = factorial(n) // (2 ** t * factorial(t) * factorial(n - 2 * t))
    f = mn_character(mu, Partition((1,) * mu.size)) if mu.size else 1
    return v_count * f


def _capped_cell(n: int, delta: int, mu: Partition) -> CellModule:
    d = cell_dim(n, mu)
    cap = _max_dim()
    if d > cap:
        raise RuntimeError(
            f"cell module at {mu}, n={n} has dimension {d} > cap {cap}; "
            "set BRAUER_MAX_DIM higher to allow it")
    return build_cell(n, delta, mu)


def _check_weight(n: int, delta: int, mu: Partition) -> None:
    if mu not in weights(n, delta).weights:
        raise ValueError(f"{mu} is not a weight of B_{n}({delta})")


@dataclass(frozen=True)
class HomQuery:
    """A single Hom-space question: maps from the cell module at `source`
    to the one at `target`, both over B_n(delta)."""

    n: int
    delta: int
    source: Partition
    target: Partition

    def __post_init__(self):
        _check_weight(self.n, self.delta, self.source)
        _check_weight(self.n, self.delta, self.target)


@dataclass(frozen=True)
class BlockGraph:
    """Weights of B_n(delta) with one directed edge per nonzero Hom space."""

    vertices: WeightSet
    edges: tuple[tuple[Partition, Partition], ...]


def central_scalar_value(n: int, delta: int, mu: Partition) -> int:
    """Content sum of mu minus t*(delta-1), t = number of contracted pairs."""
    t = (n - mu.size) // 2
    return sum(c * k for c, k in contents(mu).items()) - t * (delta - 1)


def central_scalar(n: int, delta: int, mu: Partition) -> int:
    """Scalar by which the central element acts on the cell module at mu.

    The action matrix is computed in full and checked against the closed
    form; a non-scalar action would falsify the implementation, so it is
    an assertion failure rather than a soft error.
    """
    _check_weight(n, delta, mu)
    expected = central_scalar_value(n, delta, mu)
    cell = _capped_cell(n, delta, mu)
    z = central_element(n, delta)
    want: SparseVec = {}
    for j in range(cell.dim):
        image = cell.act_element(z, {j: Fraction(1)})
        want = {j: Fraction(expected)} if expected else {}
        assert image == want, (
            f"central element is not scalar {expected} on basis vector {j} "
            f"of the cell module at {mu}, n={n}, delta={delta}")
    return expected


def gram_rank(n: int, delta: int, mu: Partition) -> int:
    """Exact rank of the cellular form on the cell module at mu."""
    _check_weight(n, delta, mu)
    cell = _capped_cell(n, delta, mu)
    g = gram_matrix(cell)
    rows = [{j: v for j, v in enumerate(row) if v} for row in g]
    return rank_of(rows)


def even_lr_sum(lam: Partition, mu: Partition) -> int:
    """Sum of Littlewood-Richardson coefficients c^lam_{mu,eta} over
    partitions eta of |lam|-|mu| with all parts even."""
    gap = lam.size - mu.size
    if gap < 0 or gap % 2:
        return 0
    return sum(lr_coefficient(mu, eta, lam)
               for eta in partitions_of(gap) if is_even(eta))


def _cycle_rep(rho: Partition) -> tuple[int, ...]:
    """A permutation (0-based image tuple) with cycle type rho."""
    image: list[int] = []
    start = 0
    for part in rho.parts:
        image.extend(start + (i + 1) % part for i in range(part))
        start += part
    return tuple(image)


@lru_cache(maxsize=None)
def _perm_traces(n: int, delta: int, mu: Partition):
    """Trace of each cycle type's permutation diagram on the cell module."""
    cell = _capped_cell(n, delta, mu)
    out = {}
    for rho in partitions_of(n):
        d = perm_diagram(_cycle_rep(rho))
        tr = Fraction(0)
        for j in range(cell.dim):
            tr += cell.act_diagram(d, {j: Fraction(1)}).get(j, 0)
        out[rho] = tr
    return out


def restriction_multiplicity(n: int, delta: int, mu: Partition,
                             lam: Partition) -> int:
    """Multiplicity of the Specht module S^lam in the restriction of the
    cell module at mu to the symmetric group.

    Computed two independent ways: a character inner product against the
    permutation-action traces, and the even-partition LR sum.  The two
    must agree; the character count is returned.
    """
    if lam.size != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    _check_weight(n, delta, mu)
    route_b = even_lr_sum(lam, mu)
    total = Fraction(0)
    for rho, tr in _perm_traces(n, delta, mu).items():
        total += conjugacy_class_size(rho) * mn_character(lam, rho) * tr
    route_a = total / factorial(n)
    assert route_a == route_b, (
        f"restriction routes disagree at mu={mu}, lam={lam}, n={n}: "
        f"character count {route_a} vs LR sum {route_b}")
    return int(route_a)


def _padded_diagram(n: int, k: int, pairs: list[tuple[int, int]]) -> BrauerDiagram:
    """Extend a pairing of the first k strands by nested arcs on the rest."""
    full = list(pairs)
    for a in range(k + 1, n, 2):
        full.append((a, a + 1))
        full.append((-a, -(a + 1)))
    return BrauerDiagram(n, n, full)


def _hom_dim_compressed(n: int, delta: int, lam: Partition,
                        mu: Partition) -> int:
    """Hom dimension via the image of the padded Young symmetrizer.

    A map out of the cell module at lam is pinned down by the image w of
    its cyclic generator.  w must lie in the image W of the symmetrizer
    (row sums then signed column sums, each strand beyond |lam| closed
    into an arc) and be killed by every padded two-strand contraction.
    Valid whenever the padding is empty or delta is nonzero; the generic
    solver covers the rest.
    """
    k = lam.size
    bound = even_lr_sum(lam, mu)
    if bound == 0:
        return 0
    cell = _capped_cell(n, delta, mu)
    pads: dict[tuple[int, ...], BrauerDiagram] = {}

    def pad_perm(p: tuple[int, ...]) -> BrauerDiagram:
        d = pads.get(p)
        if d is None:
            d = _padded_diagram(n, k, [(i + 1, -(p[i] + 1)) for i in range(k)])
            pads[p] = d
        return d

    ident = pad_perm(perms.identity(k))

    def group_pass(vec: SparseVec, blocks: list[list[int]], sign: int) -> SparseVec:
        # Coset transversals keep the term count at block_len^2 instead of
        # block_len!.  Every summand applies exactly one diagram per step,
        # so the stray arc-closure scalars stay uniform across the group.
        for pts in blocks:
            for j in range(1, len(pts)):
                acc = cell.act_diagram(ident, vec)
                for i in range(j):
                    tr = perms.transposition(k, pts[i], pts[j])
                    acc = vec_add(acc, cell.act_diagram(pad_perm(tr), vec), sign)
                vec = acc
        return vec

    row_bl = perms.row_blocks(lam)
    col_bl = perms.col_blocks(lam)
    ech = Echelon()
    w_basis: list[SparseVec] = []
    for b in range(cell.dim):
        v = cell.act_diagram(ident, {b: Fraction(1)})
        if not v:
            continue
        v = group_pass(v, row_bl, 1)
        v = group_pass(v, col_bl, -1)
        if v and ech.add(dict(v)):
            w_basis.append(v)
            if ech.rank == bound:
                break
    assert ech.rank <= bound, (
        f"symmetrizer image rank {ech.rank} exceeds its multiplicity "
        f"bound {bound} at lam={lam}, mu={mu}, n={n}, delta={delta}")
    if not w_basis:
        return 0

    hooks = []
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            pairs = [(i, j), (-i, -j)]
            pairs += [(l, -l) for l in range(1, k + 1) if l not in (i, j)]
            hooks.append(_padded_diagram(n, k, pairs))
    stacked = []
    for w in w_basis:
        image: SparseVec = {}
        for h_idx, h in enumerate(hooks):
            for key, val in cell.act_diagram(h, w).items():
                image[(h_idx, key)] = val
        stacked.append(image)
    return len(w_basis) - rank_of(stacked)


def _hom_dim_generic(n: int, delta: int, lam: Partition, mu: Partition) -> int:
    """Hom dimension as the null space of the full intertwiner system
    M * rho_source(g) = rho_target(g) * M over the generators."""
    source = _capped_cell(n, delta, lam)
    target = _capped_cell(n, delta, mu)
    unknowns = source.dim * target.dim
    if unknowns > GENERIC_UNKNOWN_CAP:
        raise RuntimeError(
            f"intertwiner system with {unknowns} unknowns at lam={lam}, "
            f"mu={mu}, n={n} is beyond the elimination cap")
    eqs: list[SparseVec] = []
    for a_cols, b_cols in zip(source.gen_actions, target.gen_actions):
        b_rows: dict[int, SparseVec] = {}
        for c, col in enumerate(b_cols):
            for a, val in col.items():
                b_rows.setdefault(a, {})[c] = val
        for b in range(source.dim):
            col_a = a_cols[b]
            for a in range(target.dim):
                row: SparseVec = {}
                for c, val in col_a.items():
                    row[(a, c)] = val
                for c, val in b_rows.get(a, {}).items():
                    row[(c, b)] = row.get((c, b), 0) - val
                row = {key: val for key, val in row.items() if val}
                if row:
                    eqs.append(row)
    return nullspace_dim(eqs, unknowns)


def hom_dim(q: HomQuery) -> int:
    """Dimension of the space of module maps from the cell module at
    q.source to the one at q.target, both over B_n(delta)."""
    n, delta, lam, mu = q.n, q.delta, q.source, q.target
    if central_scalar_value(n, delta, lam) != central_scalar_value(n, delta, mu):
        # The central element acts by distinct scalars, so any intertwiner
        # is annihilated by their difference.
        return 0
    if lam.size == n and mu.size == n:
        # Both modules are symmetric-group Specht modules with every
        # non-permutation diagram acting as zero.
        return 1 if lam == mu else 0
    if delta != 0 or lam.size == n:
        return _hom_dim_compressed(n, delta, lam, mu)
    return _hom_dim_generic(n, delta, lam, mu)


@lru_cache(maxsize=None)
def _hom_edges(n: int, delta: int) -> tuple[tuple[Partition, Partition], ...]:
    ws = weights(n, delta).weights
    edges = []
    for lam in ws:
        for mu in ws:
            if lam != mu and hom_dim(HomQuery(n, delta, lam, mu)) > 0:
                edges.append((lam, mu))
    return tuple(edges)


def block_graph(n: int, delta: int) -> BlockGraph:
    """All weights of B_n(delta) with a directed edge for every pair of
    distinct weights carrying a nonzero Hom space."""
    return BlockGraph(weights(n, delta), _hom_edges(n, delta))


def verify_blocks(n: int, delta: int) -> dict:
    """Machine-check the predicted block partition against the oracle.

    Four families of checks: every predicted class has exactly one
    minimal weight and a constant central scalar; every Hom edge found by
    the solver joins balanced weights; and from every non-minimal weight
    the descent chain through hom_target reaches the class minimum with a
    nonzero Hom space at each hop.  Returns a JSON-ready report.
    """
    checks: list[dict] = []

    def record(name: str, params: dict, ok: bool, witness=None) -> None:
        entry = {"name": name, "params": params,
                 "status": "pass" if ok else "fail"}
        if witness is not None:
            entry["witness"] = witness
        checks.append(entry)

    bp = block_partition(n, delta)
    for _, members in bp.classes:
        names = [str(w) for w in members]
        minimal = [w for w in members if is_minimal(w, delta)]
        record("unique-minimal", {"class": names}, len(minimal) == 1,
               None if len(minimal) == 1 else [str(w) for w in minimal])
        scalars = {central_scalar_value(n, delta, w) for w in members}
        record("constant-central-scalar", {"class": names},
               len(scalars) == 1,
               None if len(scalars) == 1 else sorted(scalars))

    edges = _hom_edges(n, delta)
    unbalanced = [(str(a), str(b)) for a, b in edges
                  if not is_balanced(a, b, delta)]
    record("hom-edges-balanced",
           {"n": n, "delta": delta, "edges": len(edges)},
           not unbalanced, unbalanced or None)

    for _, members in bp.classes:
        for w in members:
            if is_minimal(w, delta):
                continue
            chain = [w]
            cur = w
            ok, witness = True, None
            while not is_minimal(cur, delta):
                nxt = hom_target(cur, delta)
                if hom_dim(HomQuery(n, delta, cur, nxt)) < 1:
                    ok, witness = False, {"hop": [str(cur), str(nxt)]}
                    break
                cur = nxt
                chain.append(cur)
                if len(chain) > len(members) + 1:
                    ok, witness = False, {"chain": [str(c) for c in chain]}
                    break
            if ok and cur not in members:
                ok, witness = False, {"left-class": str(cur)}
            record("descent-chain",
                   {"start": str(w), "chain": [str(c) for c in chain]},
                   ok, witness)

    return {"n": n, "delta": delta, "checks": checks}
