"""Cell modules for the Brauer algebra B_n(delta).

The basis pairs a partial one-row diagram (t disjoint arcs on n nodes)
with a standard tableau of the weight mu, |mu| = n - 2t.  A diagram acts
by concatenation on the one-row part; if the propagating number drops
the result is zero, otherwise the leftover permutation of free nodes is
pushed onto the Specht factor.  Basis order is fixed (arc lists lex,
then tableaux) so every matrix is reproducible bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, NamedTuple

from brauerblocks import linalg, perms, specht
from brauerblocks.diagrams import (AlgebraElement, BrauerDiagram, concat,
                                   flip, hook_diagram, perm_diagram)
from brauerblocks.linalg import SparseVec
from brauerblocks.partitions import (Partition, addable_boxes, contents,
                                     removable_boxes)
from brauerblocks.specht import SpechtModule


class PartialOneRowDiagram(NamedTuple):
    """t disjoint arcs on the nodes 1..n; free nodes are the rest, read
    left to right."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    @property
    def free(self) -> tuple[int, ...]:
        taken = {x for a in self.arcs for x in a}
        return tuple(i for i in range(1, self.n + 1) if i not in taken)

    def __str__(self) -> str:
        body = " ".join(f"{a}-{b}" for a, b in self.arcs) or "-"
        return f"[{self.n}: {body}]"


def enumerate_v(n: int, t: int) -> list[PartialOneRowDiagram]:
    """All partial one-row diagrams with t arcs on n nodes, sorted
    lexicographically by arc list; n!/(2^t t! (n-2t)!) of them."""
    if not 0 <= 2 * t <= n:
        raise ValueError(f"arc count out of range: t={t}, n={n}")

    def rec(avail: tuple[int, ...], k: int) -> Iterator[tuple[tuple[int, int], ...]]:
        if k == 0:
            yield ()
            return
        if len(avail) < 2 * k:
            return
        first = avail[0]
        yield from rec(avail[1:], k)  # first node left free
        for idx in range(1, len(avail)):
            rest = avail[1:idx] + avail[idx + 1:]
            for tail in rec(rest, k - 1):
                yield ((first, avail[idx]),) + tail

    out = [PartialOneRowDiagram(n, tuple(sorted(arcs)))
           for arcs in rec(tuple(range(1, n + 1)), t)]
    out.sort(key=lambda v: v.arcs)
    expected = factorial(n) // (2 ** t * factorial(t) * factorial(n - 2 * t))
    assert len(out) == expected
    return out


def _one_row_diagram(v: PartialOneRowDiagram, m: int) -> BrauerDiagram:
    """The (n, m) diagram with v's arcs on top and free node number k
    dropping to southern node k."""
    pairs = [tuple(a) for a in v.arcs]
    pairs += [(f, -(k + 1)) for k, f in enumerate(v.free)]
    return BrauerDiagram(v.n, m, pairs)


class CellModule:
    """Immutable cell module of B_n(delta) at weight mu."""

    def __init__(self, n: int, delta: int, mu: Partition):
        if (n - mu.size) % 2 != 0 or mu.size > n:
            raise ValueError(f"|{mu}| = {mu.size} incompatible with n = {n}")
        if delta == 0 and mu.size == 0:
            raise ValueError("empty weight is absent at delta = 0")
        self.n = n
        self.delta = delta
        self.mu = mu
        self.t = (n - mu.size) // 2
        self.specht = _specht(mu)
        self.v_list = enumerate_v(n, self.t)
        self._v_index = {v.arcs: i for i, v in enumerate(self.v_list)}
        self._xv = [_one_row_diagram(v, mu.size) for v in self.v_list]
        self._dec_cache: dict = {}
        self._gen_actions: list[list[SparseVec]] | None = None

    @property
    def dim(self) -> int:
        return len(self.v_list) * self.specht.dim

    def index(self, v_idx: int, tab_idx: int) -> int:
        return v_idx * self.specht.dim + tab_idx

    def decompose(self, d: BrauerDiagram, v_idx: int):
        """How d moves the v-th one-row diagram: None if the propagating
        number drops, else (w_idx, perm for the Specht factor, loops)."""
        key = (d, v_idx)
        hit = self._dec_cache.get(key, -1)
        if hit != -1:
            return hit
        result_diag, loops = concat(d, self._xv[v_idx])
        arcs = []
        through = {}
        dead = False
        for p in result_diag.pairs:
            a, b = sorted(p, reverse=True)
            if b > 0:
                arcs.append((b, a))
            elif a < 0:
                dead = True
                break
            else:
                through[a] = -b
        if dead:
            out = None
        else:
            w_idx = self._v_index[tuple(sorted(arcs))]
            free = self.v_list[w_idx].free
            rank = {f: k for k, f in enumerate(free)}
            # result sends free node f to southern b: Specht factor sees
            # the inverse permutation (diagram stacking reverses order)
            pinv = [0] * len(free)
            for f, b in through.items():
                pinv[b - 1] = rank[f]
            out = (w_idx, tuple(pinv), loops)
        self._dec_cache[key] = out
        return out

    def act_diagram(self, d: BrauerDiagram, vec: SparseVec) -> SparseVec:
        """Left action of a single diagram, with the delta^loops factor."""
        f = self.specht.dim
        grouped: dict[int, SparseVec] = {}
        for idx, c in vec.items():
            grouped.setdefault(idx // f, {})[idx % f] = c
        out: SparseVec = {}
        for v_idx, sub in grouped.items():
            dec = self.decompose(d, v_idx)
            if dec is None:
                continue
            w_idx, pinv, loops = dec
            scale = self.delta ** loops
            if not scale:
                continue
            moved = linalg.mat_vec(self.specht.perm_matrix(pinv), sub)
            base = w_idx * f
            for tab_idx, val in moved.items():
                k = base + tab_idx
                acc = out.get(k, 0) + scale * val
                if acc:
                    out[k] = acc
                else:
                    del out[k]
        return out

    def act_element(self, elem: AlgebraElement, vec: SparseVec) -> SparseVec:
        if elem.n != self.n or elem.delta != self.delta:
            raise ValueError("element and module live over different B_n(delta)")
        out: SparseVec = {}
        for d, c in elem.terms.items():
            out = linalg.vec_add(out, self.act_diagram(d, vec), c)
        return out

    def matrix_of(self, d: BrauerDiagram) -> list[SparseVec]:
        return [self.act_diagram(d, {j: Fraction(1)}) for j in range(self.dim)]

    @property
    def gen_actions(self) -> list[list[SparseVec]]:
        """Matrices of s_1..s_{n-1} followed by X_{1,2}."""
        if self._gen_actions is None:
            mats = [self.matrix_of(perm_diagram(perms.transposition(self.n, i - 1, i)))
                    for i in range(1, self.n)]
            mats.append(self.matrix_of(hook_diagram(self.n, 1, 2)))
            self._gen_actions = mats
        return self._gen_actions

    def __repr__(self) -> str:
        return f"CellModule(n={self.n}, delta={self.delta}, mu={self.mu}, dim={self.dim})"


@lru_cache(maxsize=None)
def _specht(mu: Partition) -> SpechtModule:
    return specht.build_specht(mu)


@lru_cache(maxsize=48)
def build_cell(n: int, delta: int, mu: Partition) -> CellModule:
    return CellModule(n, delta, mu)


def gram_matrix(cell: CellModule) -> list[list[Fraction]]:
    """Invariant bilinear form on the cell basis: pair one-row diagrams by
    stacking the flip of one on the other; a propagating drop gives zero,
    otherwise the leftover permutation is evaluated in the Specht form."""
    f = cell.specht.dim
    form = cell.specht.form
    dim = cell.dim
    gram = [[Fraction(0)] * dim for _ in range(dim)]
    for vi in range(len(cell.v_list)):
        for wi in range(len(cell.v_list)):
            prod, loops = concat(flip(cell._xv[vi]), cell._xv[wi])
            if prod.propagating < prod.n:
                continue
            scale = Fraction(cell.delta) ** loops
            if not scale:
                continue
            # north a joins south b: the permutation diagram acts on the
            # Specht factor through its inverse
            pinv = [0] * prod.n
            for p in prod.pairs:
                a, b = max(p), -min(p)
                pinv[b - 1] = a - 1
            mat = cell.specht.perm_matrix(tuple(pinv))
            for k in range(f):
                col = mat[k]
                for j in range(f):
                    val = scale * sum(form[j][i] * a for i, a in col.items())
                    gram[vi * f + j][wi * f + k] = val
    return gram


def t_action_check(cell: CellModule) -> bool:
    """Does the sum of all hooks X_{i,j} act as the transposition sum plus
    the scalar t(delta-1) - (content sum of mu)?"""
    n, delta = cell.n, cell.delta
    csum = sum(c * k for c, k in contents(cell.mu).items())
    scalar = cell.t * (delta - 1) - csum
    for b in range(cell.dim):
        unit = {b: Fraction(1)}
        lhs: SparseVec = {}
        rhs: SparseVec = {b: Fraction(scalar)} if scalar else {}
        for i in range(n):
            for j in range(i + 1, n):
                lhs = linalg.vec_add(lhs, cell.act_diagram(hook_diagram(n, i + 1, j + 1), unit))
                rhs = linalg.vec_add(rhs, cell.act_diagram(
                    perm_diagram(perms.transposition(n, i, j)), unit))
        if lhs != rhs:
            return False
    return True


def restriction_rule(lam: Partition, n: int) -> tuple[list[Partition], list[Partition]]:
    """Weights appearing under restriction to B_{n-1}: remove-a-box terms
    and add-a-box terms, the latter only when the result fits in level n-1."""
    if lam.size > n or (n - lam.size) % 2 != 0:
        raise ValueError(f"{lam} is not a weight at level {n}")
    down = [lam.remove_box(b) for b in removable_boxes(lam)]
    up = ([lam.add_box(b) for b in addable_boxes(lam)]
          if lam.size + 1 <= n - 1 else [])
    return down, up
