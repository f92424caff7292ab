"""Exact boxicity and cubicity of small graphs by searching interval supergraphs.

A graph has boxicity ``k`` iff it is the meet of ``k`` interval supergraphs.
Every supergraph used in such a meet only needs edges of ``g`` plus some of
its non-edges, and among those only the inclusion-minimal interval
supergraphs matter, because a smaller factor breaks more non-edges.  The
search is therefore a set cover over non-edges: each candidate factor is
described by the set of non-edges it breaks.

Candidate supergraphs come from one of two routes.  Up to
``TABLE_MAX_N`` vertices every labelled (unit) interval graph is tabulated
once, from the unlabelled graphs of that order and all vertex permutations,
and supergraphs of ``g`` are read off the table with a vectorised mask
test.  Above that size each subset of non-edges is added and tested
directly, which is only feasible for few non-edges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, permutations

import networkx as nx
import numpy as np

from .box import bipartite_bound, box_bound, build_bipartite_box_representation, build_box_representation
from .combinatorics import check_chromatic_bound, min_vertex_cover, nu
from .cub import build_cub_representation, cub_bound
from .errors import CapacityError, InputError
from .graph import Graph, all_pairs, bipartition_of, complement, from_edge_mask, pair_index, to_graph6
from .intervals import Representation, is_interval, is_unit_interval, verify

TABLE_MAX_N = 7
NON_EDGE_CAP = 22
UNIT_NON_EDGE_CAP = 16
NODE_CAP = 1_000_000


def graphs_of_order(n: int) -> list[Graph]:
    """One representative per isomorphism class, in graph-atlas order (n <= 7)."""
    if not 0 <= n <= 7:
        raise CapacityError("exhaustive enumeration is available for n <= 7")
    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == n:
            out.append(Graph(n, frozenset(tuple(sorted(e)) for e in h.edges())))
    return out


def _permutation_weights(n: int) -> np.ndarray:
    """``w[p, e]`` = bit of the image of pair ``e`` under permutation ``p``."""
    pairs = np.array(all_pairs(n), dtype=np.int64).reshape(-1, 2)
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    a, b = perms[:, pairs[:, 0]], perms[:, pairs[:, 1]]
    lo, hi = np.minimum(a, b), np.maximum(a, b)
    idx = lo * (2 * n - lo - 1) // 2 + (hi - lo - 1)
    return np.left_shift(np.uint64(1), idx.astype(np.uint64))


@lru_cache(maxsize=None)
def labelled_class_table(n: int, unit: bool) -> np.ndarray:
    """Sorted edge masks of every labelled (unit) interval graph on ``n`` vertices."""
    if n > TABLE_MAX_N:
        raise CapacityError(f"class tables exist for n <= {TABLE_MAX_N}")
    test = is_unit_interval if unit else is_interval
    npairs = n * (n - 1) // 2
    if npairs == 0:
        return np.array([0], dtype=np.uint64)
    weights = _permutation_weights(n)
    found = []
    for g in graphs_of_order(n):
        if test(g):
            present = np.array([g.edge_mask >> e & 1 for e in range(npairs)], dtype=bool)
            found.append(weights[:, present].sum(axis=1, dtype=np.uint64))
    return np.unique(np.concatenate(found))


def _spread(sub: int, positions: list[int]) -> int:
    m = 0
    for i, p in enumerate(positions):
        if sub >> i & 1:
            m |= 1 << p
    return m


def _supergraph_masks_by_subsets(g: Graph, unit: bool, cap: int) -> list[int]:
    positions = [pair_index(u, v, g.n) for u, v in g.non_edges()]
    if len(positions) > cap:
        raise CapacityError(f"{len(positions)} non-edges exceed the supergraph cap {cap}")
    test = is_unit_interval if unit else is_interval
    base = g.edge_mask
    out = []
    for sub in range(1 << len(positions)):
        mask = base | _spread(sub, positions)
        if test(from_edge_mask(g.n, mask)):
            out.append(mask)
    return sorted(out)


def _supergraph_masks(g: Graph, unit: bool, cap: int | None = None) -> list[int]:
    if cap is None:
        cap = UNIT_NON_EDGE_CAP if unit else NON_EDGE_CAP
    if g.n <= TABLE_MAX_N:
        table = labelled_class_table(g.n, unit)
        gm = np.uint64(g.edge_mask)
        return sorted(int(x) for x in table[(table & gm) == gm])
    return _supergraph_masks_by_subsets(g, unit, cap)


def enumerate_interval_supergraphs(g: Graph, unit: bool = False, cap: int | None = None) -> list[Graph]:
    """Every (unit) interval graph obtained from ``g`` by adding some of its non-edges.

    Ordered by edge mask.  Graphs above the table size are enumerated subset
    by subset and are limited to ``cap`` non-edges.
    """
    return [from_edge_mask(g.n, m) for m in _supergraph_masks(g, unit, cap)]


# -- minimal factors and set cover --------------------------------------------


def _maximal_masks(masks: list[int]) -> list[int]:
    """Inclusion-maximal members, in descending size then ascending value."""
    pending = sorted(set(masks), key=lambda m: (-m.bit_count(), m))
    out: list[int] = []
    while pending:
        top = pending[0]
        out.append(top)
        pending = [m for m in pending[1:] if m & ~top]
    return out


def _minimal_factor_breaks(g: Graph, unit: bool, cap: int | None) -> list[int]:
    """Break sets (as non-edge masks) of the inclusion-minimal (unit) interval supergraphs."""
    non_edge = ((1 << (g.n * (g.n - 1) // 2)) - 1) & ~g.edge_mask
    if g.n <= TABLE_MAX_N:
        table = labelled_class_table(g.n, unit)
        gm = np.uint64(g.edge_mask)
        breaks = np.unique(np.uint64(non_edge) & ~table[(table & gm) == gm])
        # drop subsets of the largest sets with numpy before the exact pass
        order = np.argsort(-_popcount(breaks), kind="stable")
        breaks = breaks[order]
        keep: list[int] = []
        while breaks.size:
            top = breaks[0]
            keep.append(int(top))
            breaks = breaks[(breaks & ~top) != 0]
        return _maximal_masks(keep)
    return _maximal_masks([non_edge & ~m for m in _supergraph_masks_by_subsets(g, unit, _cap(unit, cap))])


def _cap(unit: bool, cap: int | None) -> int:
    return cap if cap is not None else (UNIT_NON_EDGE_CAP if unit else NON_EDGE_CAP)


def _popcount(a: np.ndarray) -> np.ndarray:
    counts = np.zeros(a.shape, dtype=np.int64)
    x = a.copy()
    while np.any(x):
        counts += (x & np.uint64(1)).astype(np.int64)
        x >>= np.uint64(1)
    return counts


@dataclass
class _Search:
    sets: list[int]
    node_cap: int
    explored: int = 0
    capped: bool = False

    def solve(self, uncovered: int, k: int) -> list[int] | None:
        self.explored += 1
        if self.explored > self.node_cap:
            self.capped = True
            return None
        if not uncovered:
            return []
        if k == 0:
            return None
        low = uncovered & -uncovered
        seen: dict[int, int] = {}
        widest = 0
        for s in self.sets:
            widest = max(widest, (s & uncovered).bit_count())
            if s & low:
                seen.setdefault(s & uncovered, s)
        cands = _maximal_masks(list(seen))
        if not cands or cands[0].bit_count() + (k - 1) * widest < uncovered.bit_count():
            return None
        for c in cands:
            rest = self.solve(uncovered & ~c, k - 1)
            if rest is not None:
                return [seen[c]] + rest
            if self.capped:
                return None
        return None


@dataclass
class OracleResult:
    parameter: str
    value: int | None
    witness: Representation | None
    explored: int
    capped: bool
    factors: int = 0

    def as_dict(self) -> dict:
        return {
            "parameter": self.parameter,
            "value": self.value,
            "capped": self.capped,
            "explored": self.explored,
            "minimal_factors": self.factors,
            "witness": json.loads(self.witness.to_json()) if self.witness is not None else None,
        }


def _exact(g: Graph, unit: bool, max_k: int | None, cap: int | None, node_cap: int) -> OracleResult:
    kind = "cub" if unit else "box"
    name = "cubicity" if unit else "boxicity"
    if g.is_complete():
        return OracleResult(name, 0, Representation(kind, (), g), 1, False)
    test = is_unit_interval if unit else is_interval
    direct = test(g)
    if direct:
        witness = Representation(kind, (direct.witness,), g)
        return OracleResult(name, 1, witness, 1, False, 1)
    if max_k is None:
        max_k = g.n
    sets = _minimal_factor_breaks(g, unit, cap)
    non_edge = ((1 << (g.n * (g.n - 1) // 2)) - 1) & ~g.edge_mask
    search = _Search(sets, node_cap)
    for k in range(2, max_k + 1):
        chosen = search.solve(non_edge, k)
        if search.capped:
            break
        if chosen is not None:
            dims = []
            for b in chosen:
                factor = from_edge_mask(g.n, g.edge_mask | (non_edge & ~b))
                dims.append(test(factor).witness)
            return OracleResult(name, k, Representation(kind, tuple(dims), g), search.explored, False, len(sets))
    return OracleResult(name, None, None, search.explored, True, len(sets))


def exact_boxicity(g: Graph, max_k: int | None = None, cap: int | None = None, node_cap: int = NODE_CAP) -> OracleResult:
    """Least ``k`` such that ``g`` is the meet of ``k`` interval graphs (0 for complete graphs)."""
    return _exact(g, False, max_k, cap, node_cap)


def exact_cubicity(g: Graph, max_k: int | None = None, cap: int | None = None, node_cap: int = NODE_CAP) -> OracleResult:
    """Least ``k`` such that ``g`` is the meet of ``k`` unit interval graphs."""
    return _exact(g, True, max_k, cap, node_cap)


def exact_by_tuples(g: Graph, unit: bool = False, max_k: int = 3) -> int | None:
    """Same quantity by trying every multiset of ``k`` supergraphs, no pruning.

    Uses subset enumeration for the supergraphs, so it shares nothing with
    the table route or the set-cover search.  Meant for n <= 5.
    """
    if g.is_complete():
        return 0
    sup = _supergraph_masks_by_subsets(g, unit, NON_EDGE_CAP)
    target = g.edge_mask
    for k in range(1, max_k + 1):
        for combo in combinations_with_replacement(sup, k):
            m = combo[0]
            for x in combo[1:]:
                m &= x
            if m == target:
                return k
    return None


# -- survey -------------------------------------------------------------------

CHECKS = ("cub", "box", "bipartite", "chromatic", "matching", "general")
# older spelling of the matching check, still accepted on the command line
CHECK_ALIASES = {"remark2": "matching"}


@dataclass
class SurveyRecord:
    graph6: str
    n: int
    m: int
    values: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    @property
    def violations(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]

    def as_dict(self) -> dict:
        return {"graph6": self.graph6, "n": self.n, "m": self.m, **self.values, "checks": self.checks}


@dataclass
class SurveyReport:
    n: int
    records: list[SurveyRecord]

    @property
    def violations(self) -> list[tuple[str, str]]:
        return [(r.graph6, name) for r in self.records for name in r.violations]

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r.as_dict(), separators=(",", ":")) + "\n" for r in self.records)


def survey_graph(g: Graph, checks: tuple[str, ...] = CHECKS, cub_max_n: int = 6) -> SurveyRecord:
    """Exact values, constructions and bound checks for one graph."""
    checks = tuple(CHECK_ALIASES.get(c, c) for c in checks)
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise InputError(f"unknown checks {sorted(unknown)}; expected a subset of {CHECKS}")
    rec = SurveyRecord(to_graph6(g), g.n, g.m)
    vals, ok = rec.values, rec.checks
    cover = min_vertex_cover(g)
    t = len(cover)
    vals["t"] = t
    box = exact_boxicity(g).value
    vals["box"] = box
    cub = None
    if g.n <= cub_max_n and ("cub" in checks or "general" in checks):
        cub = exact_cubicity(g).value
        vals["cub"] = cub
    if "cub" in checks:
        rep = build_cub_representation(g, cover)
        vals["cub_vc"] = len(rep)
        within = t == 0 or len(rep) <= cub_bound(g.n, t)
        ok["cub_vc"] = bool(verify(rep)) and within and (cub is None or cub <= len(rep))
    if "box" in checks:
        rep = build_box_representation(g, cover)
        vals["box_vc"] = len(rep)
        ok["box_vc"] = bool(verify(rep)) and len(rep) <= box_bound(t) and box <= len(rep)
    if "bipartite" in checks:
        bip = bipartition_of(g)
        if bip:
            rep = build_bipartite_box_representation(g, bip)
            bound = bipartite_bound(len(bip.side1), len(bip.side2))
            vals["box_bipartite"] = len(rep)
            ok["box_bipartite"] = bool(verify(rep)) and len(rep) <= bound and box <= len(rep)
    if "chromatic" in checks:
        report = check_chromatic_bound(g, box)
        vals["s"] = str(report.slack)
        vals["chi"] = report.chi_exact
        ok["chromatic"] = report.holds
    if "matching" in checks:
        nu_g, nu_co = nu(g), nu(complement(g))
        vals["nu"], vals["nu_complement"] = nu_g, nu_co
        vals["matching_bound"] = min(nu_g + 1, nu_co)
        ok["matching"] = box <= min(nu_g + 1, nu_co) and t <= 2 * nu_g
    if "general" in checks:
        ok["half_n"] = box <= g.n // 2
        if cub is not None:
            ok["box_le_cub"] = box <= cub
    return rec


def survey(n: int, checks: tuple[str, ...] = CHECKS, cub_max_n: int = 6) -> SurveyReport:
    """Run :func:`survey_graph` over one graph per isomorphism class of order ``n`` (n <= 7)."""
    return SurveyReport(n, [survey_graph(g, tuple(checks), cub_max_n) for g in graphs_of_order(n)])


def representation_is_exact(result: OracleResult, g: Graph) -> bool:
    """Witness check used by tests: verifies and has exactly ``value`` dims."""
    return (
        result.witness is not None
        and len(result.witness) == result.value
        and bool(verify(result.witness))
        and result.witness.source == g
    )

