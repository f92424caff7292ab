"""Interval representations from a vertex cover, from split graphs and for bipartite graphs.

The cover construction splits a minimal cover into non-adjacent pairs plus a
residual clique ``C``.  Each pair gets one dim, the even part ``C'`` of the
residual clique together with the independent remainder ``A`` forms a split
graph handled two clique vertices per dim, and one final dim separates ``A``
internally and deals with a leftover vertex of odd ``C``.  All endpoints are
stored at scale 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .combinatorics import (
    COVER_CAP,
    VertexCover,
    greedy_maximal_matching,
    max_matching,
    min_vertex_cover,
    minimalize_cover,
    require_minimal,
)
from .errors import InputError, PreconditionError
from .graph import Bipartition, Graph, add_edges, complement, induced_subgraph
from .intervals import IntervalAssignment, Representation, disjoint_assignment

Partial = dict[int, tuple[int, int]]


@dataclass(frozen=True)
class PairDecomposition:
    pairs: tuple[tuple[int, int], ...]
    residual: tuple[int, ...]  # C, a clique of g
    t: int

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.pairs)

    @property
    def residual_even(self) -> tuple[int, ...]:
        """C' = C without its last vertex when |C| is odd."""
        return self.residual[: len(self.residual) // 2 * 2]

    @property
    def leftover(self) -> int | None:
        return self.residual[-1] if len(self.residual) % 2 else None

    @property
    def t1(self) -> int:
        return self.t // 2


def decompose(g: Graph, cover: VertexCover, maximum: bool = True) -> PairDecomposition:
    """Pair up non-adjacent cover vertices; the unpaired rest must be a clique.

    With ``maximum=True`` the pairing is a maximum matching in the complement
    of the graph induced on the cover, otherwise a greedy maximal one.  Either
    way the dimension count works out to ``floor(t/2) + 1``.
    """
    vs = require_minimal(g, cover)
    sub, relabel = induced_subgraph(g, vs)
    back = {i: v for v, i in relabel.items()}
    co = complement(sub)
    local = max_matching(co) if maximum else greedy_maximal_matching(co)
    pairs = tuple(sorted(tuple(sorted((back[a], back[b]))) for a, b in local))
    paired = {x for p in pairs for x in p}
    residual = tuple(sorted(vs - paired))
    for a, b in combinations(residual, 2):
        if not g.has_edge(a, b):
            raise AssertionError(f"residual cover vertices {a}, {b} are non-adjacent: pairing not maximal")
    dec = PairDecomposition(pairs, residual, len(vs))
    assert dec.l + (dec.t - 2 * dec.l) // 2 + 1 == dec.t // 2 + 1
    return dec


def build_pair_dim(g: Graph, a: int, b: int) -> IntervalAssignment:
    """Dim that separates ``a`` and ``b`` from all of their non-neighbours."""
    if a == b or g.has_edge(a, b):
        raise InputError(f"pair ({a}, {b}) must be two distinct non-adjacent vertices")
    na, nb = g.adj[a], g.adj[b]
    iv = []
    for v in g.vertices:
        in_a, in_b = na >> v & 1, nb >> v & 1
        if v == a:
            iv.append((0, 2))
        elif v == b:
            iv.append((8, 10))
        elif in_a and in_b:
            iv.append((0, 10))
        elif in_a:
            iv.append((0, 6))
        elif in_b:
            iv.append((4, 10))
        else:
            iv.append((4, 6))
    return IntervalAssignment(tuple(iv))


@dataclass(frozen=True)
class SplitInput:
    clique: tuple[int, ...]
    independent: tuple[int, ...]

    def check(self, host: Graph) -> None:
        if set(self.clique) & set(self.independent):
            raise InputError("clique and independent side overlap")
        for a, b in combinations(self.clique, 2):
            if not host.has_edge(a, b):
                raise InputError(f"clique vertices {a}, {b} are not adjacent")
        for a, b in combinations(self.independent, 2):
            if host.has_edge(a, b):
                raise InputError(f"independent vertices {a}, {b} are adjacent")


def _points(order: Sequence[int]) -> Partial:
    return {s: (2 * (i + 1), 2 * (i + 1)) for i, s in enumerate(order)}


def split_clique_side(host: Graph, inp: SplitInput) -> list[Partial]:
    """ceil(|K|/2) interval dims for the split graph on ``K + S`` inside ``host``.

    Each dim puts every independent vertex on its own point.  The dim for
    clique pair ``(a, b)`` orders ``S`` as ``N(a)-N(b)``, ``N(a)&N(b)``,
    ``N(b)-N(a)``, rest, and lets ``a`` and ``b`` cover exactly their own
    neighbours while still touching each other; an odd clique's last vertex
    gets a dim of its own.  Other clique vertices span the whole dim.  The
    returned mappings cover ``K + S`` only.
    """
    inp.check(host)
    clique, S = inp.clique, inp.independent
    full = (0, 2 * len(S) + 2)
    dims: list[Partial] = []
    for k in range(0, len(clique) - 1, 2):
        a, b = clique[k], clique[k + 1]
        na, nb = host.adj[a], host.adj[b]
        x_a = [s for s in S if na >> s & 1 and not nb >> s & 1]
        x_ab = [s for s in S if na >> s & 1 and nb >> s & 1]
        x_b = [s for s in S if nb >> s & 1 and not na >> s & 1]
        x_0 = [s for s in S if not (na | nb) >> s & 1]
        iv = _points(x_a + x_ab + x_b + x_0)
        end_a = 2 * len(x_a)
        end_ab = end_a + 2 * len(x_ab)
        end_b = end_ab + 2 * len(x_b)
        iv[a] = (1, end_ab + 1)
        iv[b] = (end_a + 1, max(end_b, end_a + 1))
        for c in clique:
            if c not in (a, b):
                iv[c] = full
        dims.append(iv)
    if len(clique) % 2:
        c0 = clique[-1]
        near = [s for s in S if host.adj[c0] >> s & 1]
        iv = _points(near + [s for s in S if not host.adj[c0] >> s & 1])
        iv[c0] = (1, 2 * len(near) + 1)
        for c in clique[:-1]:
            iv[c] = full
        dims.append(iv)
    return dims


def lift(partial: Partial, n: int) -> IntervalAssignment:
    """Extend a partial dim to all ``n`` vertices; newcomers span every used point."""
    if partial:
        lo = min(p[0] for p in partial.values()) - 1
        hi = max(p[1] for p in partial.values()) + 1
    else:
        lo, hi = 0, 0
    return IntervalAssignment(tuple(partial.get(v, (lo, hi)) for v in range(n)))


def build_final_dim(g: Graph, cover: VertexCover, leftover: int | None = None) -> IntervalAssignment:
    """Dim giving each independent vertex its own block; the cover spans them.

    With a ``leftover`` cover vertex ``v`` its neighbours in ``A`` come first
    and ``v`` stops right after them.
    """
    vs = frozenset(cover.vertices if isinstance(cover, VertexCover) else cover)
    rest = sorted(set(g.vertices) - vs)
    if leftover is not None:
        if leftover not in vs:
            raise InputError(f"leftover vertex {leftover} is not in the cover")
        near = [x for x in rest if g.has_edge(leftover, x)]
        if not near:
            raise PreconditionError(f"leftover vertex {leftover} has no neighbour outside the cover")
        rest = near + [x for x in rest if not g.has_edge(leftover, x)]
    r = len(rest)
    iv: Partial = {x: (4 * i - 2, 4 * i) for i, x in enumerate(rest, start=1)}
    for v in vs:
        iv[v] = (2, 4 * r)
    if leftover is not None:
        iv[leftover] = (2, 4 * len(near))
    return IntervalAssignment.from_mapping(iv, g.n)


def build_box_representation(g: Graph, cover: VertexCover, maximum: bool = True) -> Representation:
    """``floor(t/2) + 1`` interval dims realising ``g`` from minimal cover of size t."""
    vs = require_minimal(g, cover)
    if not vs:
        return Representation("box", (disjoint_assignment(g.n),), g, ("disjoint",))
    dec = decompose(g, cover, maximum)
    dims = [build_pair_dim(g, a, b) for a, b in dec.pairs]
    labels = [f"pair:{a}-{b}" for a, b in dec.pairs]
    independent = tuple(sorted(set(g.vertices) - vs))
    c_even = dec.residual_even
    for k, part in enumerate(split_clique_side(g, SplitInput(c_even, independent))):
        dims.append(lift(part, g.n))
        labels.append(f"split:{c_even[2 * k]}-{c_even[2 * k + 1]}")
    dims.append(build_final_dim(g, vs, dec.leftover))
    labels.append("final")
    return Representation("box", tuple(dims), g, tuple(labels))


def box_bound(t: int) -> int:
    return t // 2 + 1


def bipartite_bound(n1: int, n2: int) -> int:
    """The bipartite bound min(ceil(n1/2), ceil(n2/2)), valid once the smaller side has >= 3 vertices.

    Smaller sides fall back to ``floor(n1/2) + 1`` from the cover bound
    (C_4, with sides of size 2, has boxicity 2).
    """
    small, large = sorted((n1, n2))
    if small >= 3:
        return min(-(-small // 2), -(-large // 2))
    return small // 2 + 1


def build_bipartite_box_representation(g: Graph, bip: Bipartition, cap: int = COVER_CAP) -> Representation:
    """At most ``min(ceil(n1/2), ceil(n2/2))`` dims for a bipartite graph.

    Odd or small sides go through the cover construction; an even smaller
    side ``V1`` with at least four vertices uses two of its vertices ``x, y``
    as separators in a final dim and turns ``V1 - {x, y}`` into a clique for
    the split-graph dims.
    """
    bip.check(g)
    if len(bip.side1) > len(bip.side2):
        bip = bip.swapped()
    n1 = len(bip.side1)
    if n1 % 2 or n1 < 4:
        cover = min_vertex_cover(g, cap) if g.n <= cap else minimalize_cover(g, bip.side1)
        return build_box_representation(g, cover)
    v1 = sorted(bip.side1)
    x, y, mid = v1[0], v1[1], v1[2:]
    side2 = sorted(bip.side2)
    host = add_edges(g, combinations(mid, 2))
    dims, labels = [], []
    for k, part in enumerate(split_clique_side(host, SplitInput(tuple(mid), tuple(side2)))):
        dims.append(lift(part, g.n))
        labels.append(f"split:{mid[2 * k]}-{mid[2 * k + 1]}")
    ordered = [x] + mid + [y]
    iv: Partial = {v: (4 * i - 2, 4 * i) for i, v in enumerate(ordered, start=1)}
    top = 4 * n1
    for v in side2:
        near_x, near_y = g.has_edge(v, x), g.has_edge(v, y)
        iv[v] = (2 if near_x else 6, top if near_y else top - 4)
    dims.append(IntervalAssignment.from_mapping(iv, g.n))
    labels.append("final")
    return Representation("box", tuple(dims), g, tuple(labels))
