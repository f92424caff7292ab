"""Interval assignments, (unit) interval recognition and representation checks.

Endpoints are integers measured in units of ``1/scale``.  Every construction
in this package uses ``scale = 2`` (all of their endpoints are multiples of
one half); recognition witnesses for unit interval graphs may need a finer
grid and carry their own scale.  Intervals are closed, so touching endpoints
intersect.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import reduce
from math import lcm
from typing import Sequence

from .errors import CapacityError, InputError
from .graph import Edge, Graph, all_pairs, bits

RECOGNITION_CAP = 16
CONSTRUCTION_SCALE = 2


@dataclass(frozen=True)
class IntervalAssignment:
    """One closed interval per vertex, indexed by vertex id."""

    intervals: tuple[tuple[int, int], ...]
    scale: int = CONSTRUCTION_SCALE

    def __post_init__(self) -> None:
        if self.scale <= 0:
            raise InputError("scale must be a positive integer")
        for v, (lo, hi) in enumerate(self.intervals):
            if lo > hi:
                raise InputError(f"interval of vertex {v} has lo > hi: {(lo, hi)}")

    @classmethod
    def from_mapping(cls, mapping: dict[int, tuple[int, int]], n: int, scale: int = CONSTRUCTION_SCALE):
        missing = [v for v in range(n) if v not in mapping]
        if missing:
            raise InputError(f"no interval for vertices {missing}")
        return cls(tuple((int(mapping[v][0]), int(mapping[v][1])) for v in range(n)), scale)

    @property
    def n(self) -> int:
        return len(self.intervals)

    def __getitem__(self, v: int) -> tuple[int, int]:
        return self.intervals[v]

    def is_unit(self) -> bool:
        return all(hi - lo == self.scale for lo, hi in self.intervals)

    def rescaled(self, scale: int) -> IntervalAssignment:
        if scale % self.scale:
            raise InputError(f"cannot rescale from {self.scale} to {scale}")
        k = scale // self.scale
        return IntervalAssignment(tuple((lo * k, hi * k) for lo, hi in self.intervals), scale)

    def span(self) -> tuple[int, int]:
        return min(lo for lo, _ in self.intervals), max(hi for _, hi in self.intervals)


def intersection_graph(a: IntervalAssignment, n: int | None = None) -> Graph:
    if n is not None and a.n != n:
        raise InputError(f"assignment covers {a.n} vertices, expected {n}")
    iv = a.intervals
    return Graph(
        a.n,
        frozenset((u, v) for u, v in all_pairs(a.n) if max(iv[u][0], iv[v][0]) <= min(iv[u][1], iv[v][1])),
    )


def meet(graphs: Sequence[Graph], n: int | None = None) -> Graph:
    """Edge-set intersection; the empty meet is the complete graph on ``n``."""
    if not graphs:
        if n is None:
            raise InputError("meet of no graphs needs an explicit vertex count")
        return Graph(n, frozenset(all_pairs(n)))
    n0 = graphs[0].n if n is None else n
    if any(h.n != n0 for h in graphs):
        raise InputError("meet needs graphs on the same vertex count")
    return Graph(n0, reduce(frozenset.intersection, (h.edges for h in graphs)))


def is_supergraph(h: Graph, g: Graph) -> bool:
    if h.n != g.n:
        raise InputError("supergraph test needs equal vertex counts")
    return g.edges <= h.edges


# -- recognition --------------------------------------------------------------


def maximal_cliques(g: Graph) -> list[int]:
    """All maximal cliques as bitmasks (Bron-Kerbosch with pivoting), sorted."""
    adj = g.adj
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: (adj[u] & p).bit_count())
        for v in bits(p & ~adj[pivot]):
            expand(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    return sorted(out)


def _is_chordal(g: Graph) -> bool:
    # maximum cardinality search; each vertex's earlier neighbours must all see
    # the most recently visited one of them
    adj = g.adj
    weight = [0] * g.n
    rank: dict[int, int] = {}
    visited = 0
    for step in range(g.n):
        v = max((u for u in range(g.n) if not visited >> u & 1), key=lambda u: (weight[u], -u))
        earlier = adj[v] & visited
        if earlier:
            parent = max(bits(earlier), key=rank.__getitem__)
            if earlier & ~(1 << parent) & ~adj[parent]:
                return False
        rank[v] = step
        visited |= 1 << v
        for u in bits(adj[v] & ~visited):
            weight[u] += 1
    return True


@dataclass(frozen=True)
class Recognition:
    """Outcome of a recognition call; truthy iff the graph is in the class."""

    member: bool
    witness: IntervalAssignment | None = None
    clique_order: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.member


def _consecutive_order(cliques: list[int]) -> tuple[int, ...] | None:
    """Order the cliques so that each vertex's cliques are consecutive, if possible."""
    k = len(cliques)
    full = (1 << k) - 1
    failed: set[tuple[int, int]] = set()

    def extend(remaining: int, last: int, seen: int, seq: list[int]) -> bool:
        if not remaining:
            return True
        if (remaining, last) in failed:
            return False
        closed = seen & ~cliques[last]
        for i in bits(remaining):
            if cliques[i] & closed:
                continue
            seq.append(i)
            if extend(remaining & ~(1 << i), i, seen | cliques[i], seq):
                return True
            seq.pop()
        failed.add((remaining, last))
        return False

    for first in range(k):
        seq = [first]
        if extend(full & ~(1 << first), first, cliques[first], seq):
            return tuple(seq)
    return None


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise CapacityError(f"recognition is capped at {cap} vertices, graph has {g.n}")


def is_interval(g: Graph, cap: int = RECOGNITION_CAP) -> Recognition:
    """Interval-graph test via a consecutive ordering of the maximal cliques.

    The witness places vertex ``v`` on ``[2f, 2l]`` where ``f``/``l`` are the
    first/last positions of cliques containing ``v`` in the found order.
    """
    _check_cap(g, cap)
    if g.n == 0:
        return Recognition(True, IntervalAssignment(()), ())
    if not _is_chordal(g):
        return Recognition(False)
    cliques = maximal_cliques(g)
    if len(cliques) > g.n:
        return Recognition(False)
    seq = _consecutive_order(cliques)
    if seq is None:
        return Recognition(False)
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for pos, ci in enumerate(seq):
        for v in bits(cliques[ci]):
            first.setdefault(v, pos)
            last[v] = pos
    witness = IntervalAssignment(tuple((2 * first[v], 2 * last[v]) for v in range(g.n)))
    return Recognition(True, witness, tuple(cliques[i] for i in seq))


def find_claw(g: Graph) -> tuple[int, int, int, int] | None:
    """An induced K_{1,3} as (centre, leaf, leaf, leaf), or None."""
    adj = g.adj
    for c in range(g.n):
        nb = bits(adj[c])
        for i, a in enumerate(nb):
            for j in range(i + 1, len(nb)):
                b = nb[j]
                if adj[a] >> b & 1:
                    continue
                for d in nb[j + 1 :]:
                    if not adj[a] >> d & 1 and not adj[b] >> d & 1:
                        return c, a, b, d
    return None


def _unit_positions(g: Graph, order_: list[int], length: int) -> list[int] | None:
    """Integer left endpoints for unit intervals of ``length`` respecting ``order_``.

    Difference constraints solved with Bellman-Ford; None when infeasible.
    """
    n = g.n
    cons: list[tuple[int, int, int]] = []  # x[a] - x[b] <= w  as edge b -> a
    for i in range(n - 1):
        cons.append((order_[i], order_[i + 1], 0))  # x[prev] <= x[next]
    for i in range(n):
        for j in range(i + 1, n):
            u, v = order_[i], order_[j]
            if g.has_edge(u, v):
                cons.append((v, u, length))
            else:
                cons.append((u, v, -(length + 1)))
    dist = [0] * n
    for _ in range(n + 1):
        changed = False
        for a, b, w in cons:
            if dist[b] + w < dist[a]:
                dist[a] = dist[b] + w
                changed = True
        if not changed:
            low = min(dist)
            return [d - low for d in dist]
    return None


def is_unit_interval(g: Graph, cap: int = RECOGNITION_CAP) -> Recognition:
    """Unit interval test: interval and claw-free.

    The witness orders vertices by their clique span and solves for integer
    left endpoints; its scale is the smallest unit length that works.
    """
    base = is_interval(g, cap)
    if not base or find_claw(g) is not None:
        return Recognition(False)
    if g.n == 0:
        return base
    assert base.clique_order is not None
    span: dict[int, list[int]] = {}
    for pos, c in enumerate(base.clique_order):
        for v in bits(c):
            span.setdefault(v, [pos, pos])[1] = pos
    order_ = sorted(range(g.n), key=lambda v: (span[v][0], span[v][1], v))
    for length in range(1, 2 * g.n + 3):
        xs = _unit_positions(g, order_, length)
        if xs is not None:
            witness = IntervalAssignment(tuple((x, x + length) for x in xs), length)
            return Recognition(True, witness, base.clique_order)
    raise AssertionError("claw-free interval graph without a unit model")  # pragma: no cover


# -- representations ----------------------------------------------------------


@dataclass(frozen=True)
class Representation:
    """A list of (unit) interval assignments meant to realise ``source``.

    ``labels`` optionally names the construction stage that produced each dim.
    """

    kind: str
    dims: tuple[IntervalAssignment, ...]
    source: Graph
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.kind not in ("box", "cub"):
            raise InputError(f"representation kind must be 'box' or 'cub', got {self.kind!r}")
        if self.labels and len(self.labels) != len(self.dims):
            raise InputError("one label per dim expected")

    def __len__(self) -> int:
        return len(self.dims)

    def graphs(self) -> list[Graph]:
        return [intersection_graph(d) for d in self.dims]

    def common_scale(self) -> int:
        return lcm(*(d.scale for d in self.dims)) if self.dims else CONSTRUCTION_SCALE

    def to_json(self) -> str:
        scale = self.common_scale()
        dims = []
        for d in self.dims:
            d = d.rescaled(scale)
            dims.append({str(v): [lo, hi] for v, (lo, hi) in enumerate(d.intervals)})
        doc = {"kind": self.kind, "scale": scale, "n": self.source.n, "dims": dims}
        return json.dumps(doc, separators=(",", ":"))


def representation_from_json(text: str, source: Graph) -> Representation:
    try:
        doc = json.loads(text)
        kind, scale, n, raw = doc["kind"], int(doc["scale"]), int(doc["n"]), doc["dims"]
        dims = tuple(
            IntervalAssignment.from_mapping({int(k): tuple(v) for k, v in d.items()}, n, scale) for d in raw
        )
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"malformed representation JSON: {exc}") from None
    if n != source.n:
        raise InputError(f"representation is over {n} vertices but the graph has {source.n}")
    return Representation(kind, dims, source)


@dataclass
class Violation:
    clause: str
    dim: int | None
    witness: object

    def as_dict(self) -> dict:
        w = self.witness
        return {"clause": self.clause, "dim": self.dim, "witness": list(w) if isinstance(w, tuple) else w}


@dataclass
class VerificationReport:
    n_dims: int
    violations: list[Violation]
    breakers: dict[Edge, int]
    recognition_checked: bool

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "dims": self.n_dims,
            "recognition_checked": self.recognition_checked,
            "violations": [v.as_dict() for v in self.violations],
        }


def verify(rep: Representation, cap: int = RECOGNITION_CAP) -> VerificationReport:
    """Check every clause of a representation against its source graph.

    Per dim: vertex coverage, supergraph of the source, unit lengths for
    ``cub``, and (up to ``cap`` vertices) membership of the dim's intersection
    graph in the (unit) interval class.  Globally: the meet of all dims equals
    the source.  ``breakers`` maps each non-edge to the first dim that breaks it.
    """
    g = rep.source
    violations: list[Violation] = []
    recognise = g.n <= cap
    graphs: list[Graph] = []
    for i, d in enumerate(rep.dims):
        if d.n != g.n:
            violations.append(Violation("coverage", i, d.n))
            continue
        h = intersection_graph(d)
        graphs.append(h)
        for e in sorted(g.edges - h.edges):
            violations.append(Violation("supergraph", i, e))
            break
        if rep.kind == "cub":
            for v, (lo, hi) in enumerate(d.intervals):
                if hi - lo != d.scale:
                    violations.append(Violation("unit_length", i, v))
                    break
        if recognise:
            member = is_unit_interval(h, cap) if rep.kind == "cub" else is_interval(h, cap)
            if not member:
                violations.append(Violation("unit_interval" if rep.kind == "cub" else "interval", i, None))
    breakers: dict[Edge, int] = {}
    if len(graphs) == len(rep.dims):
        for e in g.non_edges():
            for i, h in enumerate(graphs):
                if e not in h.edges:
                    breakers[e] = i
                    break
            else:
                violations.append(Violation("meet", None, e))
    return VerificationReport(len(rep.dims), violations, breakers, recognise)


def disjoint_assignment(n: int) -> IntervalAssignment:
    """Pairwise disjoint unit intervals ``[4i, 4i+2]`` (the edgeless case)."""
    return IntervalAssignment(tuple((4 * i, 4 * i + 2) for i in range(n)))

