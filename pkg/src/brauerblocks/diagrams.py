"""Exact arithmetic in the Brauer algebra B_n(delta).

Diagrams are reduced perfect matchings on n northern and t southern
nodes; concatenation returns the reduced diagram together with the
number of closed loops removed, and the algebra layer applies the
delta^loops factor (0^0 = 1, so delta = 0 is handled uniformly).
Distinguished elements: permutation diagrams, the hook elements
X_{i,j}, the arc idempotents, a delta-independent corner idempotent
for use at delta = 0, and Young symmetrizers inside the group algebra.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import factorial
from typing import Iterator

from brauerblocks import perms
from brauerblocks.partitions import Partition, specht_dim

# Node encoding inside a diagram: northern i is +i (1..n), southern j is -j.


class BrauerDiagram:
    """A reduced (n, t) diagram: a perfect matching on n northern and t
    southern nodes.  Equal iff they connect the same pairs."""

    __slots__ = ("n", "t", "pairs")

    def __init__(self, n: int, t: int, pairs):
        norm = frozenset(frozenset(p) for p in pairs)
        if (n + t) % 2 != 0:
            raise ValueError(f"odd node count: n={n}, t={t}")
        nodes = [x for p in norm for x in p]
        expected = set(range(1, n + 1)) | set(-j for j in range(1, t + 1))
        if len(nodes) != n + t or set(nodes) != expected:
            raise ValueError(f"not a perfect matching on {n}+{t} nodes: {pairs}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "pairs", norm)

    def __setattr__(self, name, value):
        raise AttributeError("BrauerDiagram is immutable")

    def __eq__(self, other) -> bool:
        return (isinstance(other, BrauerDiagram)
                and (self.n, self.t, self.pairs) == (other.n, other.t, other.pairs))

    def __hash__(self) -> int:
        return hash((self.n, self.t, self.pairs))

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(p, reverse=True)) for p in self.pairs)

    def __repr__(self) -> str:
        return f"BrauerDiagram({self.n},{self.t},{self.sorted_pairs()})"

    def __str__(self) -> str:
        return format_diagram(self)

    @property
    def propagating(self) -> int:
        return sum(1 for p in self.pairs if min(p) < 0 < max(p))


def parse_diagram(text: str) -> BrauerDiagram:
    """Parse "n=4; 1-2 3-1' 4-2' 3'-4'" (primed node = southern).  The
    southern count is n unless "t=" is also given."""
    head, _, body = text.partition(";")
    fields = dict(f.strip().split("=") for f in head.split(",") if "=" in f)
    n = int(fields["n"])
    t = int(fields.get("t", n))
    pairs = []
    for token in body.split():
        a, _, b = token.partition("-")

        def node(s: str) -> int:
            s = s.strip()
            return -int(s[:-1]) if s.endswith("'") else int(s)

        pairs.append((node(a), node(b)))
    return BrauerDiagram(n, t, pairs)


def format_diagram(d: BrauerDiagram) -> str:
    """Northern-anchored pairs first ascending, then southern pairs, the
    lower-numbered end written first: "n=4; 1-2 3-1' 4-2' 3'-4'"."""

    def node(x: int) -> str:
        return f"{-x}'" if x < 0 else str(x)

    def key(x: int) -> tuple[bool, int]:
        return (x < 0, abs(x))

    shown = sorted((sorted(p, key=key) for p in d.pairs),
                   key=lambda q: key(q[0]))
    body = " ".join(f"{node(a)}-{node(b)}" for a, b in shown)
    head = f"n={d.n}" if d.t == d.n else f"n={d.n},t={d.t}"
    return f"{head}; {body}"


def identity_diagram(n: int) -> BrauerDiagram:
    return BrauerDiagram(n, n, [(i, -i) for i in range(1, n + 1)])


def perm_diagram(sigma: tuple[int, ...]) -> BrauerDiagram:
    """Propagating diagram of a permutation: northern i joins southern
    sigma(i) (0-based tuple in, 1-based nodes out)."""
    n = len(sigma)
    return BrauerDiagram(n, n, [(i + 1, -(sigma[i] + 1)) for i in range(n)])


def u_diagram(n: int, i: int) -> BrauerDiagram:
    """Arcs {i, i+1} on both boundaries, all other strands straight."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"u_diagram index out of range: {i}")
    pairs = [(i, i + 1), (-i, -(i + 1))]
    pairs += [(k, -k) for k in range(1, n + 1) if k not in (i, i + 1)]
    return BrauerDiagram(n, n, pairs)


def hook_diagram(n: int, i: int, j: int) -> BrauerDiagram:
    """Arcs {i, j} on both boundaries, all other strands straight."""
    if not 1 <= i < j <= n:
        raise ValueError(f"hook indices out of range: {i},{j}")
    pairs = [(i, j), (-i, -j)]
    pairs += [(k, -k) for k in range(1, n + 1) if k not in (i, j)]
    return BrauerDiagram(n, n, pairs)


def concat(a: BrauerDiagram, b: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """Concatenate a above b, returning the reduced diagram and the number
    of closed loops removed.  Callers apply the delta^loops factor."""
    if a.t != b.n:
        raise ValueError(f"size mismatch: ({a.n},{a.t}) over ({b.n},{b.t})")
    # vertices: ('N', i) result-north, ('S', j) result-south, ('M', k) middle
    edges = []
    for p in a.pairs:
        edges.append(tuple(("N", x) if x > 0 else ("M", -x) for x in p))
    for p in b.pairs:
        edges.append(tuple(("M", x) if x > 0 else ("S", -x) for x in p))
    adj: dict = {}
    for eid, (u, v) in enumerate(edges):
        adj.setdefault(u, []).append((v, eid))
        adj.setdefault(v, []).append((u, eid))
    used = [False] * len(edges)

    def walk(start) -> tuple:
        """Follow unused edges from start until hitting a boundary vertex
        or running out (closed cycle); consumes the edges walked."""
        cur = start
        while True:
            step = next(((nxt, eid) for nxt, eid in adj[cur] if not used[eid]), None)
            if step is None:
                return cur
            cur, eid = step
            used[eid] = True
            if cur[0] != "M":
                return cur

    result_pairs = []
    boundary = ([("N", i) for i in range(1, a.n + 1)]
                + [("S", j) for j in range(1, b.t + 1)])
    for v in boundary:
        if all(used[eid] for _, eid in adj.get(v, [])):
            continue
        end = walk(v)
        x = v[1] if v[0] == "N" else -v[1]
        y = end[1] if end[0] == "N" else -end[1]
        result_pairs.append((x, y))
    loops = 0
    for eid in range(len(edges)):
        if not used[eid]:
            loops += 1
            walk(edges[eid][0])  # consumes the whole cycle
    return BrauerDiagram(a.n, b.t, result_pairs), loops


def flip(d: BrauerDiagram) -> BrauerDiagram:
    """Vertical reflection: swap the northern and southern boundaries."""
    return BrauerDiagram(d.t, d.n, [tuple(-x for x in p) for p in d.pairs])


def all_diagrams(n: int, t: int | None = None) -> Iterator[BrauerDiagram]:
    """All reduced (n, t) diagrams; (2k-1)!! of them for n + t = 2k."""
    if t is None:
        t = n
    nodes = list(range(1, n + 1)) + [-j for j in range(1, t + 1)]

    def matchings(avail: list[int]) -> Iterator[list[tuple[int, int]]]:
        if not avail:
            yield []
            return
        first = avail[0]
        for k in range(1, len(avail)):
            rest = avail[1:k] + avail[k + 1:]
            for m in matchings(rest):
                yield [(first, avail[k])] + m

    for m in matchings(nodes):
        yield BrauerDiagram(n, t, m)


class AlgebraElement:
    """A formal rational linear combination of (n, n) diagrams at a fixed
    integer delta.  Zero coefficients are never stored."""

    __slots__ = ("n", "delta", "terms")

    def __init__(self, n: int, delta: int, terms=None):
        clean = {}
        for d, c in (terms or {}).items():
            if d.n != n or d.t != n:
                raise ValueError(f"diagram size {d.n},{d.t} in B_{n}")
            c = Fraction(c)
            if c:
                clean[d] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    def __eq__(self, other) -> bool:
        return (isinstance(other, AlgebraElement)
                and (self.n, self.delta, self.terms) == (other.n, other.delta, other.terms))

    def __hash__(self) -> int:
        return hash((self.n, self.delta, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*[{d}]" for d, c in sorted(
            self.terms.items(), key=lambda t: t[0].sorted_pairs()))
        return f"AlgebraElement({self.n}, delta={self.delta}: {body or '0'})"

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "AlgebraElement"):
        if self.n != other.n or self.delta != other.delta:
            raise ValueError("mixing elements of different B_n(delta)")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, 0) + c
        return AlgebraElement(self.n, self.delta, terms)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "AlgebraElement":
        return AlgebraElement(self.n, self.delta,
                              {d: scalar * c for d, c in self.terms.items()})

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        terms: dict = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                prod, loops = concat(d1, d2)
                c = c1 * c2 * self.delta ** loops
                if c:
                    terms[prod] = terms.get(prod, 0) + c
        return AlgebraElement(self.n, self.delta, terms)

    def flip(self) -> "AlgebraElement":
        return AlgebraElement(self.n, self.delta,
                              {flip(d): c for d, c in self.terms.items()})


def from_diagram(d: BrauerDiagram, delta: int, coeff=1) -> AlgebraElement:
    return AlgebraElement(d.n, delta, {d: coeff})


def identity_element(n: int, delta: int) -> AlgebraElement:
    return from_diagram(identity_diagram(n), delta)


def transposition_element(n: int, delta: int, i: int) -> AlgebraElement:
    """The adjacent transposition s_i = (i, i+1), 1-based."""
    return from_diagram(perm_diagram(perms.transposition(n, i - 1, i)), delta)


def x_hook(n: int, delta: int, i: int, j: int) -> AlgebraElement:
    return from_diagram(hook_diagram(n, i, j), delta)


def t_element(n: int, delta: int) -> AlgebraElement:
    """Sum of all hooks X_{i,j} over 1 <= i < j <= n."""
    out = AlgebraElement(n, delta)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out + x_hook(n, delta, i, j)
    return out


def central_element(n: int, delta: int) -> AlgebraElement:
    """Sum over i < j of (transposition (i,j) minus hook X_{i,j}); commutes
    with everything in B_n(delta)."""
    out = AlgebraElement(n, delta)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out + from_diagram(perm_diagram(perms.transposition(n, i - 1, j - 1)), delta)
            out = out - x_hook(n, delta, i, j)
    return out


def e(n: int, delta: int, t: int | None = None) -> AlgebraElement:
    """The arc idempotent: t nested-free arc pairs {n-1,n}, {n-3,n-2}, ...
    scaled by delta^-t.  e(n, delta) is the single-arc case t = 1;
    e(n, delta, 0) is the identity.  Needs delta != 0."""
    if t is None:
        t = 1
    if not 0 <= 2 * t <= n:
        raise ValueError(f"arc count out of range: t={t}, n={n}")
    if t == 0:
        return identity_element(n, delta)
    if delta == 0:
        raise ValueError("arc idempotent needs delta != 0; see e_bar")
    pairs = []
    for k in range(t):
        a = n - 2 * k
        pairs += [(a - 1, a), (-(a - 1), -a)]
    pairs += [(i, -i) for i in range(1, n - 2 * t + 1)]
    return from_diagram(BrauerDiagram(n, n, pairs), delta, Fraction(1, delta ** t))


def e_bar(n: int, delta: int) -> AlgebraElement:
    """A single loop-free diagram idempotent usable at every delta,
    including 0: northern arc {n-1, n}, southern arc {n-2, n-1}, a line
    from n-2 down to n, the rest straight.  Squaring creates no loop, so
    it is idempotent independently of delta, and conjugating B_n by it
    cuts exactly two strands."""
    if n < 3:
        raise ValueError("n must be at least 3")
    pairs = [(n - 1, n), (-(n - 2), -(n - 1)), (n - 2, -n)]
    pairs += [(i, -i) for i in range(1, n - 2)]
    return from_diagram(BrauerDiagram(n, n, pairs), delta)


def young_symmetrizer(lam: Partition, n: int, delta: int) -> AlgebraElement:
    """The classical idempotent of the group algebra of the symmetric
    group sitting inside B_n: (dim/n!) * sum of sgn(c)*c*r over the
    column and row groups of the row-reading filling of lam."""
    if lam.size != n:
        raise ValueError(f"size mismatch: |{lam}| != {n}")
    scale = Fraction(specht_dim(lam), factorial(n))
    terms: dict = {}
    rows = perms.row_blocks(lam)
    cols = perms.col_blocks(lam)
    for c in perms.block_perms(cols, n):
        sgn = perms.sign(c)
        for r in perms.block_perms(rows, n):
            # diagram product D(c)*D(r) corresponds to the map r o c
            d = perm_diagram(perms.compose(r, c))
            terms[d] = terms.get(d, 0) + sgn
    return scale * AlgebraElement(n, delta, {d: Fraction(v) for d, v in terms.items()})
