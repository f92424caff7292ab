"""Undirected simple graphs on dense vertex ids, generators and file formats.

Vertices are always ``0..n-1``.  Edges are stored as normalised pairs
``(u, v)`` with ``u < v``; neighbourhoods are additionally cached as integer
bitmasks, which is what the exponential routines elsewhere in the package
operate on.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator

import networkx as nx

from .errors import InputError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def pair_index(u: int, v: int, n: int) -> int:
    """Position of the pair ``{u, v}`` in the lexicographic list of all pairs."""
    if u > v:
        u, v = v, u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def all_pairs(n: int) -> list[Edge]:
    return list(combinations(range(n), 2))


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise InputError(f"bad edge {(u, v)} for n={self.n}")

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitmask of every vertex."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def edge_mask(self) -> int:
        """Bitmask over :func:`pair_index` positions of the present edges."""
        mask = 0
        for u, v in self.edges:
            mask |= 1 << pair_index(u, v, self.n)
        return mask

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def non_edges(self) -> list[Edge]:
        return [(u, v) for u, v in all_pairs(self.n) if not self.adj[u] >> v & 1]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    """Set bit positions of ``mask`` in ascending order."""
    return list(_bits(mask))


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    edges = set()
    for u, v in pairs:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"vertex id out of range in pair {(u, v)} (n={n})")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        edges.add(_norm(u, v))
    return Graph(n, frozenset(edges))


def from_adjacency_masks(adj: Iterable[int]) -> Graph:
    adj = list(adj)
    n = len(adj)
    return Graph(n, frozenset((u, v) for u in range(n) for v in _bits(adj[u] >> (u + 1) << (u + 1))))


def from_edge_mask(n: int, mask: int) -> Graph:
    pairs = all_pairs(n)
    return Graph(n, frozenset(pairs[i] for i in _bits(mask)))


# -- families -----------------------------------------------------------------


@dataclass(frozen=True)
class Bipartition:
    side1: frozenset[int]
    side2: frozenset[int]

    def check(self, g: Graph) -> None:
        if self.side1 & self.side2 or (self.side1 | self.side2) != frozenset(g.vertices):
            raise InputError("bipartition sides must partition the vertex set")
        for u, v in g.edges:
            if (u in self.side1) == (v in self.side1):
                raise InputError(f"edge {(u, v)} lies inside one side")

    def swapped(self) -> Bipartition:
        return Bipartition(self.side2, self.side1)


def path(n: int) -> Graph:
    return from_edge_list(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return from_edge_list(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph(n, frozenset(all_pairs(n)))


def empty(n: int) -> Graph:
    return Graph(n)


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    if n < 1:
        raise InputError("a star needs at least one vertex")
    return from_edge_list(n, ((0, i) for i in range(1, n)))


def complete_bipartite(n1: int, n2: int) -> Graph:
    return from_edge_list(n1 + n2, ((i, n1 + j) for i in range(n1) for j in range(n2)))


def roberts(n: int) -> Graph:
    """K_n minus the perfect matching {(0,1), (2,3), ...}."""
    if n < 2 or n % 2:
        raise InputError(f"roberts graph needs even n >= 2, got {n}")
    return Graph(n, frozenset((u, v) for u, v in all_pairs(n) if not (u % 2 == 0 and v == u + 1)))


def crown(n: int) -> Graph:
    """K_{n/2,n/2} on sides {0..n/2-1}, {n/2..n-1} minus the matching (i, i+n/2)."""
    if n < 4 or n % 2:
        raise InputError(f"crown graph needs even n >= 4, got {n}")
    h = n // 2
    return from_edge_list(n, ((i, h + j) for i in range(h) for j in range(h) if i != j))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each pair, in lexicographic order, kept when ``Random(seed).random() < p``."""
    if not 0.0 <= p <= 1.0:
        raise InputError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    return Graph(n, frozenset(e for e in all_pairs(n) if rng.random() < p))


def random_bipartite(n1: int, n2: int, p: float, seed: int) -> Graph:
    """Random subgraph of K_{n1,n2} (sides {0..n1-1}, {n1..n1+n2-1}), same sampling rule."""
    if not 0.0 <= p <= 1.0:
        raise InputError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    pairs = [(i, n1 + j) for i in range(n1) for j in range(n2)]
    return from_edge_list(n1 + n2, (e for e in pairs if rng.random() < p))


def _sides(n1: int, n2: int) -> Bipartition:
    return Bipartition(frozenset(range(n1)), frozenset(range(n1, n1 + n2)))


FAMILIES = (
    "path",
    "cycle",
    "complete",
    "empty",
    "star",
    "complete_bipartite",
    "roberts",
    "crown",
    "random",
    "random_bipartite",
)


def generate(family: str, *, with_bipartition: bool = False, **params):
    """Build a member of a named family.

    ``params`` are ``n`` for the one-parameter families, ``n1``/``n2`` for
    ``complete_bipartite``, ``n, p, seed`` for ``random`` and
    ``n1, n2, p, seed`` for ``random_bipartite``.  With
    ``with_bipartition=True`` the bipartite families (``star``,
    ``complete_bipartite``, ``crown``, ``random_bipartite``) return
    ``(graph, bipartition)`` using the generator's own sides.
    """
    try:
        if family == "path":
            g, sides = path(params["n"]), None
        elif family == "cycle":
            g, sides = cycle(params["n"]), None
        elif family == "complete":
            g, sides = complete(params["n"]), None
        elif family == "empty":
            g, sides = empty(params["n"]), None
        elif family == "star":
            g, sides = star(params["n"]), _sides(1, params["n"] - 1)
        elif family == "complete_bipartite":
            g, sides = complete_bipartite(params["n1"], params["n2"]), _sides(params["n1"], params["n2"])
        elif family == "roberts":
            g, sides = roberts(params["n"]), None
        elif family == "crown":
            g, sides = crown(params["n"]), _sides(params["n"] // 2, params["n"] // 2)
        elif family == "random":
            g, sides = random_graph(params["n"], params.get("p", 0.5), params.get("seed", 0)), None
        elif family == "random_bipartite":
            n1, n2 = params["n1"], params["n2"]
            g = random_bipartite(n1, n2, params.get("p", 0.5), params.get("seed", 0))
            sides = _sides(n1, n2)
        else:
            raise InputError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    except KeyError as exc:
        raise InputError(f"family {family!r} needs parameter {exc.args[0]!r}") from None
    if not with_bipartition:
        return g
    if sides is None:
        raise InputError(f"family {family!r} is not bipartite")
    return g, sides


# -- operations ---------------------------------------------------------------


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(e for e in all_pairs(g.n) if e not in g.edges))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``s``, relabelled densely in ascending id order.

    Returns the subgraph and the map old id -> new id.
    """
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise InputError(f"vertex id {v} out of range (n={g.n})")
    relabel = {v: i for i, v in enumerate(verts)}
    edges = frozenset((relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel)
    return Graph(len(verts), edges), relabel


def add_edges(g: Graph, pairs: Iterable[tuple[int, int]]) -> Graph:
    return from_edge_list(g.n, list(g.edges) + list(pairs))


@dataclass(frozen=True)
class OddCycle:
    """Witness that a graph is not bipartite."""

    cycle: tuple[int, ...]

    def __bool__(self) -> bool:
        return False


def bipartition_of(g: Graph) -> Bipartition | OddCycle:
    """BFS 2-colouring; the lowest vertex of each component lands in side1.

    On failure returns an :class:`OddCycle` (falsy) holding the vertices of an
    odd cycle in traversal order.
    """
    color: list[int | None] = [None] * g.n
    parent: list[int] = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if color[root] is not None:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in _bits(g.adj[u]):
                if color[w] is None:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return OddCycle(_odd_cycle(u, w, parent, depth))
    side1 = frozenset(v for v in range(g.n) if color[v] == 0)
    return Bipartition(side1, frozenset(g.vertices) - side1)


def _odd_cycle(u: int, w: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return tuple(left + right[::-1])


# -- file formats -------------------------------------------------------------


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based)."""
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not rows:
        raise InputError("empty edge-list input")
    try:
        n, m = (int(x) for x in rows[0])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError:
        raise InputError("edge-list lines must hold exactly two integers") from None
    if len(pairs) != m:
        raise InputError(f"header announces {m} edges but {len(pairs)} follow")
    return from_edge_list(n, pairs)


def _to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.sorted_edges())
    return h


def to_graph6(g: Graph, header: bool = False) -> str:
    """graph6 encoding of ``g`` (vertex ``i`` is row ``i``)."""
    return nx.to_graph6_bytes(_to_networkx(g), header=header).decode("ascii").strip()


def parse_graph6(text: str) -> Graph:
    try:
        h = nx.from_graph6_bytes(text.strip().encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError) as exc:
        raise InputError(f"invalid graph6 string: {exc}") from None
    return Graph(h.number_of_nodes(), frozenset(tuple(sorted(e)) for e in h.edges()))


def read_graph(path: str | Path) -> Graph:
    """Read a graph file; ``.g6`` / ``.graph6`` means graph6, anything else is an edge list."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    if path.suffix in (".g6", ".graph6"):
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) != 1:
            raise InputError("expected exactly one graph6 line")
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def write_graph(g: Graph, path: str | Path) -> None:
    path = Path(path)
    if path.suffix in (".g6", ".graph6"):
        path.write_text(to_graph6(g) + "\n")
    else:
        path.write_text(to_edge_list_text(g))
