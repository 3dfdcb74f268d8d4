from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given

from updomatic import generators as gen
from updomatic.graph import (
    Graph,
    ParseError,
    bipartition,
    classify,
    complement,
    find_induced_2k2,
    is_2k2_free,
    parse_dimacs,
    parse_edge_list,
    split_certificate,
    unique_cycle,
)

from .conftest import graphs


def test_edge_list_path():
    g = parse_edge_list("0 1\n1 2")
    assert (g.n, g.m) == (3, 2)


def test_edge_list_header_only():
    g = parse_edge_list("n 4\n")
    assert (g.n, g.m) == (4, 0)


def test_edge_list_dedup():
    assert parse_edge_list("0 1\n0 1").m == 1


@pytest.mark.parametrize("text", ["0 0", "0 1 2", "a b", "n 2\n0 5", "n x"])
def test_edge_list_rejects(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


def test_dimacs_triangle():
    g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3")
    assert g == gen.complete(3)


def test_dimacs_index_error():
    with pytest.raises(ParseError):
        parse_dimacs("p edge 2 1\ne 1 3")


def test_dimacs_edgeless():
    g = parse_dimacs("c comment\np edge 5 0")
    assert (g.n, g.m) == (5, 0)


def test_complement_examples():
    assert complement(gen.complete(4)).m == 0
    assert complement(gen.empty(3)) == gen.complete(3)
    p4 = gen.path(4)
    c = complement(p4)
    # b-d-a-c with a..d = 0..3
    assert set(c.edges()) == {(1, 3), (0, 3), (0, 2)}
    assert nx.is_isomorphic(c.to_networkx(), p4.to_networkx())


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


@given(graphs())
def test_handshake_and_symmetry(g):
    assert sum(g.degrees()) == 2 * g.m
    for u, v in g.edges():
        assert u in g.neighbors(v) and v in g.neighbors(u)


@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(g.to_edge_list()) == g


@given(graphs(min_n=1))
def test_graph6_round_trip(g):
    assert Graph.from_graph6(g.graph6()) == g


def test_classify_p5():
    tags = classify(gen.path(5)).tags
    assert "Tree" in tags and "TwoK2Free" not in tags and "Split" not in tags
    assert find_induced_2k2(gen.path(5)) is not None


def test_classify_c4():
    tags = classify(gen.cycle(4)).tags
    assert {"Unicyclic", "CoBipartite", "TwoK2Free"} <= tags
    assert "Split" not in tags


def test_classify_paw():
    cls = classify(gen.paw())
    assert {"Unicyclic", "Split", "TwoK2Free"} <= cls.tags
    assert cls.split.omega == 3
    assert len(unique_cycle(gen.paw())) == 3


@given(graphs())
def test_split_certificate_matches_networkx_free_definition(g):
    cert = split_certificate(g)
    # split iff no induced 2K2, C4 or C5
    ng = g.to_networkx()
    bad = False
    for size, pattern in ((4, nx.Graph([(0, 1), (2, 3)])), (4, nx.cycle_graph(4)), (5, nx.cycle_graph(5))):
        for sub in combinations(range(g.n), size):
            if nx.is_isomorphic(ng.subgraph(sub), pattern):
                bad = True
                break
    assert (cert is not None) == (not bad)
    if cert is not None:
        assert cert.is_valid(g)


@given(graphs())
def test_bipartition_is_proper(g):
    part = bipartition(g)
    assert (part is not None) == nx.is_bipartite(g.to_networkx())
    if part is not None:
        for u, v in g.edges():
            assert (u in part.X) != (v in part.X)


def test_generators_invariants():
    g = gen.random_unicyclic(9, 3)
    assert g.m == 9 and g.is_connected()
    ch = gen.random_bipartite_chain(3, 3, 5)
    nbhds = sorted((ch.neighbors(x) for x in range(3)), key=len)
    assert all(a <= b for a, b in zip(nbhds, nbhds[1:]))
    assert len(list(gen.all_graphs(3))) == 8
    assert gen.star(4).n == 5 and gen.star(4).max_degree == 4
    with pytest.raises(ValueError):
        gen.cycle(2)


def test_enumeration_counts():
    # OEIS A000088, A000055
    assert [len(gen.nonisomorphic_graphs(n)) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]
    assert [len(gen.nonisomorphic_trees(n)) for n in range(1, 9)] == [1, 1, 1, 2, 3, 6, 11, 23]
    assert all(is_2k2_free(g) for g in gen.two_k2_free_graphs(5))
