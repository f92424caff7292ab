"""Unit interval representation from a minimal vertex cover.

For a cover ``{v_1..v_t}`` with independent remainder ``A = {w_0..w_(a-1)}``
this emits ``t - 1`` dims (one per cover vertex except the pivot ``v_t``)
plus ``ceil(log2 a)`` dims indexed by the binary digits of the position of
each ``w`` in ``A``.  Scaled endpoints (``scale = 2``) are used throughout, so
``[0, 1]`` of the real line is stored as ``(0, 2)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import VertexCover, require_minimal
from .errors import InputError
from .graph import Graph
from .intervals import IntervalAssignment, Representation, disjoint_assignment


def bit(j: int, k: int) -> int:
    """The (j+1)-th least significant binary digit of ``k``."""
    if j < 0 or k < 0:
        raise InputError("bit index and value must be nonnegative")
    return k >> j & 1


def bit_width(alpha: int) -> int:
    """ceil(log2 alpha) for alpha >= 1."""
    return (alpha - 1).bit_length()


@dataclass(frozen=True)
class CubPlan:
    cover: tuple[int, ...]  # v_1 .. v_t, pivot last
    independent: tuple[int, ...]  # w_0 .. w_(alpha-1), pivot neighbour first

    @property
    def t(self) -> int:
        return len(self.cover)

    @property
    def alpha(self) -> int:
        return len(self.independent)

    @property
    def width(self) -> int:
        return bit_width(self.alpha) if self.alpha else 0

    @property
    def pivot(self) -> int:
        return self.cover[-1]


def plan(g: Graph, cover: VertexCover) -> CubPlan:
    """Fix the pivot ``v_t`` (lowest cover id) and ``w_0`` (its lowest neighbour in A)."""
    vs = require_minimal(g, cover)
    rest = sorted(set(g.vertices) - vs)
    if not vs:
        return CubPlan((), tuple(rest))
    order = sorted(vs)
    pivot = order[0]
    w0 = min(w for w in rest if g.has_edge(pivot, w))
    return CubPlan(tuple(order[1:] + [pivot]), (w0,) + tuple(w for w in rest if w != w0))


def build_Ui(g: Graph, p: CubPlan, i: int) -> IntervalAssignment:
    """Dim for cover vertex ``v_i``, 1 <= i <= t-1: v_i / N(v_i) / everyone else."""
    if not 1 <= i <= p.t - 1:
        raise InputError(f"cover dim index must lie in 1..{p.t - 1}, got {i}")
    vi = p.cover[i - 1]
    nb = g.adj[vi]
    iv = []
    for x in g.vertices:
        if x == vi:
            iv.append((0, 2))
        elif nb >> x & 1:
            iv.append((2, 4))
        else:
            iv.append((4, 6))
    return IntervalAssignment(tuple(iv))


def build_Utj(g: Graph, p: CubPlan, j: int) -> IntervalAssignment:
    """Dim separating members of A by binary digit ``j`` of their position."""
    if not 0 <= j < p.width:
        raise InputError(f"bit dim index must lie in 0..{p.width - 1}, got {j}")
    iv: dict[int, tuple[int, int]] = {p.pivot: (1, 3)}
    for v in p.cover[:-1]:
        iv[v] = (2, 4)
    ref = bit(j, 0)
    for k, w in enumerate(p.independent):
        if k == 0 or bit(j, k) == ref:
            iv[w] = (0, 2)
        elif g.has_edge(w, p.pivot):
            iv[w] = (3, 5)
        else:
            iv[w] = (4, 6)
    return IntervalAssignment.from_mapping(iv, g.n)


def build_cub_representation(g: Graph, cover: VertexCover) -> Representation:
    """All ``t - 1 + ceil(log2(n - t))`` unit dims; one disjoint dim when ``t = 0``."""
    p = plan(g, cover)
    if p.t == 0:
        return Representation("cub", (disjoint_assignment(g.n),), g, ("disjoint",))
    dims = [build_Ui(g, p, i) for i in range(1, p.t)]
    labels = [f"cover:{p.cover[i - 1]}" for i in range(1, p.t)]
    dims += [build_Utj(g, p, j) for j in range(p.width)]
    labels += [f"bit:{j}" for j in range(p.width)]
    return Representation("cub", tuple(dims), g, tuple(labels))


def cub_bound(n: int, t: int) -> int:
    """t + ceil(log2(n - t)) - 1 for a cover of size 1 <= t < n; 1 for edgeless graphs."""
    if t == 0:
        return 1
    return t + bit_width(n - t) - 1


def classify_break(p: CubPlan, x: int, y: int) -> str:
    """Which family of dims is responsible for separating the non-edge ``xy``."""
    cover = set(p.cover)
    if x in cover and y in cover:
        return "cover"
    if x in cover or y in cover:
        return "bit" if p.pivot in (x, y) else "cover"
    return "bit"

