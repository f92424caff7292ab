"""Vertex covers, matchings, colouring and the chromatic / matching bounds.

All exact routines are exponential and guarded by a vertex cap; they branch
in a fixed order so that results (including which optimum is returned) do
not depend on anything but the input graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import networkx as nx

from .errors import CapacityError, InputError, PreconditionError
from .graph import Edge, Graph, bits, complement

COVER_CAP = 24
SEARCH_CAP = 16


@dataclass(frozen=True)
class VertexCover:
    vertices: frozenset[int]
    is_minimal: bool = True

    @property
    def size(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(sorted(self.vertices))

    def __contains__(self, v: object) -> bool:
        return v in self.vertices


def _cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise CapacityError(f"{what} is capped at {cap} vertices, graph has {g.n}")


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def is_vertex_cover(g: Graph, c: Iterable[int]) -> bool:
    c = set(c)
    return all(u in c or v in c for u, v in g.edges)


def removable_vertex(g: Graph, c: Iterable[int]) -> int | None:
    """A member of cover ``c`` all of whose neighbours lie in ``c`` (highest id first)."""
    cm = _mask(c)
    for v in sorted(set(c), reverse=True):
        if g.adj[v] & ~cm == 0:
            return v
    return None


def require_minimal(g: Graph, cover: VertexCover | Iterable[int]) -> frozenset[int]:
    """Return the cover's vertex set, raising unless it is a minimal vertex cover."""
    vs = frozenset(cover.vertices if isinstance(cover, VertexCover) else cover)
    if not is_vertex_cover(g, vs):
        raise PreconditionError("not a vertex cover")
    v = removable_vertex(g, vs)
    if v is not None:
        raise PreconditionError(f"cover is not minimal: vertex {v} has no neighbour outside it")
    return vs


def _greedy_matching_size(adj: tuple[int, ...], alive: int) -> int:
    size = 0
    while alive:
        u = (alive & -alive).bit_length() - 1
        nb = adj[u] & alive
        if nb:
            w = (nb & -nb).bit_length() - 1
            alive &= ~(1 << w)
            size += 1
        alive &= ~(1 << u)
    return size


def min_vertex_cover(g: Graph, cap: int = COVER_CAP) -> VertexCover:
    """Minimum vertex cover by branch and bound.

    Branching takes the lowest undecided vertex with an undecided neighbour
    either into the cover or out of it (then all its neighbours go in); the
    first optimum met in that order is returned.
    """
    _cap(g, cap, "exact vertex cover")
    adj = g.adj
    best_size = g.n + 1
    best = 0

    def search(alive: int, cover: int, size: int) -> None:
        nonlocal best, best_size
        # drop vertices without undecided neighbours: they never need to join
        active = 0
        for v in bits(alive):
            if adj[v] & alive:
                active |= 1 << v
        if not active:
            if size < best_size:
                best, best_size = cover, size
            return
        if size + _greedy_matching_size(adj, active) >= best_size:
            return
        v = (active & -active).bit_length() - 1
        search(active & ~(1 << v), cover | 1 << v, size + 1)
        nb = adj[v] & active
        search(active & ~nb & ~(1 << v), cover | nb, size + nb.bit_count())

    search((1 << g.n) - 1, 0, 0)
    return VertexCover(frozenset(bits(best)), True)


def minimalize_cover(g: Graph, c: Iterable[int]) -> VertexCover:
    """Drop removable vertices from cover ``c``, trying them in descending id order."""
    cm = _mask(c)
    if not is_vertex_cover(g, bits(cm)):
        raise InputError("input set is not a vertex cover")
    for v in sorted(bits(cm), reverse=True):
        if g.adj[v] & ~cm == 0:
            cm &= ~(1 << v)
    return VertexCover(frozenset(bits(cm)), True)


def greedy_maximal_matching(g: Graph) -> list[Edge]:
    used = 0
    out = []
    for u, v in g.sorted_edges():
        if not (used >> u & 1 or used >> v & 1):
            out.append((u, v))
            used |= 1 << u | 1 << v
    return out


def approx_vertex_cover(g: Graph) -> VertexCover:
    """Both ends of a greedy maximal matching, then minimalised (at most 2x optimum)."""
    ends = [x for e in greedy_maximal_matching(g) for x in e]
    return minimalize_cover(g, ends)


def max_matching(g: Graph) -> list[Edge]:
    """Maximum-cardinality matching of a general graph (Edmonds' blossom algorithm)."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.sorted_edges())
    return sorted(tuple(sorted(e)) for e in nx.max_weight_matching(h, maxcardinality=True))


def is_maximal_matching(g: Graph, matching: Iterable[Edge]) -> bool:
    matched = 0
    for u, v in matching:
        if not g.has_edge(u, v) or matched >> u & 1 or matched >> v & 1:
            return False
        matched |= 1 << u | 1 << v
    return all(matched >> u & 1 or matched >> v & 1 for u, v in g.edges)


def min_maximal_matching(g: Graph, cap: int = SEARCH_CAP) -> list[Edge]:
    """A maximal matching of minimum cardinality (its size is nu(G)).

    Take the lowest edge ``uv`` among unmatched vertices: any maximal matching
    matches ``u`` or ``v``, so branch over the edges at ``u`` and ``v``.
    """
    _cap(g, cap, "minimum maximal matching")
    adj = g.adj
    memo: dict[int, tuple[Edge, ...]] = {}

    def solve(free: int) -> tuple[Edge, ...]:
        if free in memo:
            return memo[free]
        for u in bits(free):
            nb = adj[u] & free
            if nb:
                v = (nb & -nb).bit_length() - 1
                break
        else:
            memo[free] = ()
            return ()
        best: tuple[Edge, ...] | None = None
        for a in (u, v):
            for w in bits(adj[a] & free):
                if a == v and w == u:
                    continue
                rest = solve(free & ~(1 << a) & ~(1 << w))
                if best is None or len(rest) + 1 < len(best):
                    best = (tuple(sorted((a, w))),) + rest
        memo[free] = best
        return best

    return sorted(solve((1 << g.n) - 1))


def nu(g: Graph, cap: int = SEARCH_CAP) -> int:
    return len(min_maximal_matching(g, cap))


def optimal_coloring(g: Graph, cap: int = SEARCH_CAP) -> list[int]:
    """A proper colouring with the fewest colours (backtracking, increasing k)."""
    _cap(g, cap, "exact colouring")
    if g.n == 0:
        return []
    adj = g.adj
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    colors = [-1] * g.n

    def fill(i: int, k: int, used: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        taken = {colors[w] for w in bits(adj[v]) if colors[w] >= 0}
        for c in range(min(used + 1, k)):
            if c not in taken:
                colors[v] = c
                if fill(i + 1, k, max(used, c + 1)):
                    return True
        colors[v] = -1
        return False

    k = 1
    while not fill(0, k, 0):
        k += 1
    return colors


def chromatic_number(g: Graph, cap: int = SEARCH_CAP) -> int:
    return max(optimal_coloring(g, cap), default=-1) + 1


@dataclass(frozen=True)
class ChromaticCheckReport:
    n: int
    box_exact: int
    slack: Fraction
    bound: Fraction
    chi_exact: int

    @property
    def holds(self) -> bool:
        return self.chi_exact >= self.bound

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "box": self.box_exact,
            "s": str(self.slack),
            "bound": str(self.bound),
            "chi": self.chi_exact,
            "holds": self.holds,
        }


def check_chromatic_bound(g: Graph, box_exact: int, cap: int = SEARCH_CAP) -> ChromaticCheckReport:
    """Check chi(G) >= n / (2s + 2) where box(G) = n/2 - s."""
    slack = Fraction(g.n, 2) - box_exact
    bound = Fraction(g.n) / (2 * slack + 2) if g.n else Fraction(0)
    return ChromaticCheckReport(g.n, box_exact, slack, bound, chromatic_number(g, cap))


def matching_box_bound(g: Graph, cap: int = SEARCH_CAP) -> int:
    """min(nu(G) + 1, nu(complement of G))."""
    return min(nu(g, cap) + 1, nu(complement(g), cap))
