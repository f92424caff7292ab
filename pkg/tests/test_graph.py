from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from _oracles import graphs
from boxicity.errors import InputError
from boxicity.graph import (
    Bipartition,
    Graph,
    bipartition_of,
    complement,
    complete,
    crown,
    cycle,
    from_edge_list,
    generate,
    induced_subgraph,
    pair_index,
    all_pairs,
    parse_edge_list,
    parse_graph6,
    path,
    random_graph,
    read_graph,
    roberts,
    star,
    to_edge_list_text,
    to_graph6,
    write_graph,
)


def test_from_edge_list_examples():
    c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.edges == {(0, 1), (1, 2), (2, 3), (0, 3)}
    assert c4 == cycle(4)
    assert from_edge_list(3, []).m == 0
    assert from_edge_list(2, [(0, 1), (1, 0)]).m == 1


@pytest.mark.parametrize("pairs", [[(0, 4)], [(-1, 0)], [(2, 2)]])
def test_from_edge_list_rejects(pairs):
    with pytest.raises(InputError):
        from_edge_list(4, pairs)


def test_pair_index_is_lexicographic_position():
    for n in range(1, 9):
        assert [pair_index(u, v, n) for u, v in all_pairs(n)] == list(range(n * (n - 1) // 2))


def test_generator_examples():
    assert roberts(4).edges == {(0, 2), (0, 3), (1, 2), (1, 3)}
    c8 = crown(8)
    assert c8.m == 12 and all(c8.degree(v) == 3 for v in range(8))
    s5 = star(5)
    assert s5.m == 4 and all(0 in e for e in s5.edges)


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
def test_roberts_edge_count(n):
    assert roberts(n).m == n * (n - 1) // 2 - n // 2


@pytest.mark.parametrize("n", [4, 6, 8, 12])
def test_crown_edge_count(n):
    assert crown(n).m == (n // 2) ** 2 - n // 2


@pytest.mark.parametrize("n", range(1, 10))
def test_star_edge_count(n):
    assert star(n).m == n - 1


@pytest.mark.parametrize("family,n", [("roberts", 5), ("roberts", 0), ("crown", 6 + 1), ("crown", 2)])
def test_parity_violations(family, n):
    with pytest.raises(InputError):
        generate(family, n=n)


def test_generate_with_bipartition():
    g, bip = generate("crown", n=8, with_bipartition=True)
    assert bip.side1 == set(range(4)) and bip.side2 == set(range(4, 8))
    bip.check(g)
    with pytest.raises(InputError):
        generate("roberts", n=4, with_bipartition=True)
    with pytest.raises(InputError):
        generate("path")


def test_random_is_reproducible():
    assert random_graph(9, 0.4, seed=3) == random_graph(9, 0.4, seed=3)
    assert generate("random", n=9, p=0.4, seed=3) == random_graph(9, 0.4, seed=3)
    assert random_graph(12, 0.5, seed=1) != random_graph(12, 0.5, seed=2)


def test_complement_examples():
    assert complement(complete(4)).m == 0
    assert complement(cycle(4)).edges == {(0, 2), (1, 3)}


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


def test_induced_subgraph_examples():
    sub, relabel = induced_subgraph(cycle(4), [0, 1, 2])
    assert sub == path(3) and relabel == {0: 0, 1: 1, 2: 2}
    sub, _ = induced_subgraph(roberts(6), {0, 1, 2})
    assert sub.edges == {(0, 2), (1, 2)}
    with pytest.raises(InputError):
        induced_subgraph(cycle(4), [5])


@given(graphs())
def test_induced_on_everything_is_identity(g):
    sub, relabel = induced_subgraph(g, range(g.n))
    assert sub == g and all(k == v for k, v in relabel.items())


def test_bipartition_examples():
    bip = bipartition_of(cycle(4))
    assert bip.side1 == {0, 2} and bip.side2 == {1, 3}
    odd = bipartition_of(cycle(5))
    assert not odd and len(odd.cycle) == 5
    assert bipartition_of(crown(8)) == Bipartition(frozenset(range(4)), frozenset(range(4, 8)))


@given(graphs(max_n=10))
def test_bipartition_is_valid_or_has_odd_cycle(g):
    result = bipartition_of(g)
    if result:
        result.check(g)
    else:
        cyc = result.cycle
        assert len(cyc) % 2 == 1 and len(set(cyc)) == len(cyc)
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@settings(max_examples=200)
@given(graphs(max_n=20))
def test_graph6_matches_networkx_bytes(g):
    ours = to_graph6(g)
    assert ours.encode() == nx.to_graph6_bytes(_nx(g), header=False).strip()
    assert parse_graph6(ours) == g


def test_graph6_large_size_prefix():
    g = path(70)
    assert to_graph6(g).encode() == nx.to_graph6_bytes(_nx(g), header=False).strip()
    assert parse_graph6(">>graph6<<" + to_graph6(g)) == g


def test_graph6_rejects_garbage():
    with pytest.raises(InputError):
        parse_graph6("C")  # body too short
    with pytest.raises(InputError):
        parse_graph6("\x10")


@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(to_edge_list_text(g)) == g


def test_edge_list_format_errors():
    with pytest.raises(InputError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(InputError):
        parse_edge_list("3 1\n0 x\n")
    with pytest.raises(InputError):
        parse_edge_list("")


def test_file_round_trip(tmp_path):
    g = crown(8)
    for name in ("g.g6", "g.txt"):
        write_graph(g, tmp_path / name)
        assert read_graph(tmp_path / name) == g
    assert (tmp_path / "g.txt").read_text().splitlines()[0] == "8 12"
