import pytest
from hypothesis import given, strategies as st

from updomatic import generators as gen
from updomatic.cobip import cobipartition, source_set_transform, upper_domatic_cobipartite
from updomatic.graph import Bipartition, Graph, GraphClassError, complement
from updomatic.oracle import iter_partitions, transitivity_bf, upper_domatic_bf
from updomatic.partition import VertexPartition, domination_digraph, is_upper_domatic, sources


def test_complete_singletons_unchanged():
    g = gen.complete(4)
    pi = VertexPartition([[i] for i in range(4)])
    out = source_set_transform(g, pi)
    assert out == pi
    assert sources(domination_digraph(g, out)) == [0, 1, 2, 3]


def test_c4_d_partitions():
    g = gen.cycle(4)
    for pi in iter_partitions(g, 3, "upper"):
        out = source_set_transform(g, pi)
        assert out.k == 3 and is_upper_domatic(g, out)
        assert sources(domination_digraph(g, out))


# complement is the path 0-1-2 plus the edge 3-4; block {0, 2} lies in one
# clique and misses block {1, 4}, so the transform swaps 0 and 1
SWAP_GRAPH = Graph(5, [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)])
SWAP_PI = VertexPartition([[0, 2], [3], [1, 4]])


def test_swap_branch():
    assert is_upper_domatic(SWAP_GRAPH, SWAP_PI)
    out = source_set_transform(SWAP_GRAPH, SWAP_PI)
    assert out.as_lists() == [[1, 2], [3], [0, 4]]
    assert is_upper_domatic(SWAP_GRAPH, out) and sources(domination_digraph(SWAP_GRAPH, out))


def test_rejects_bad_input():
    with pytest.raises(GraphClassError):
        cobipartition(gen.cycle(5))
    g = gen.cycle(4)
    with pytest.raises(ValueError):
        source_set_transform(g, VertexPartition([[0], [1], [2], [3]]))
    with pytest.raises(ValueError):
        source_set_transform(g, VertexPartition([[0, 1], [2, 3]]), Bipartition(frozenset({0, 2}), frozenset({1, 3})))


def test_solver_examples():
    assert upper_domatic_cobipartite(gen.complete(5)).value == 5
    p4c = complement(gen.path(4))
    assert upper_domatic_cobipartite(p4c).value == upper_domatic_bf(p4c).value
    chain = complement(gen.random_bipartite_chain(3, 3, 11))
    res = upper_domatic_cobipartite(chain)
    assert res.value == upper_domatic_bf(chain).value == transitivity_bf(chain).value


@pytest.mark.parametrize("n", range(1, 7))
def test_transform_exhaustive(n):
    for g in gen.cobipartite_graphs(n):
        sides = cobipartition(g)
        D = upper_domatic_bf(g).value
        for k in range(1, D + 1):
            for pi in iter_partitions(g, k, "upper"):
                out = source_set_transform(g, pi, sides)
                assert out.k == k and sources(domination_digraph(g, out))


@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 2**20))
def test_tr_equals_d_on_chain_complements(a, b, seed):
    g = complement(gen.random_bipartite_chain(a, b, seed))
    assert transitivity_bf(g).value == upper_domatic_bf(g).value
