from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from updomatic import generators as gen
from updomatic.graph import ParseError
from updomatic.partition import (
    PartitionError,
    VertexPartition,
    classify_partition,
    domination_digraph,
    dominates,
    in_degrees,
    parse_partition,
    sinks,
    sources,
)

from .conftest import graphs

C4_TRANSITIVE = VertexPartition([[2, 3], [1], [0]])


def test_dominates_examples():
    p3 = gen.path(3)
    assert dominates(p3, {1}, {0, 2})
    assert not dominates(p3, {0}, {2})
    k4 = gen.complete(4)
    assert dominates(k4, {0}, {1, 2, 3})


def test_digraph_k3_e3():
    single = VertexPartition([[0], [1], [2]])
    dd = domination_digraph(gen.complete(3), single)
    assert all(dd(i, j) for i in range(3) for j in range(3) if i != j)
    dd = domination_digraph(gen.empty(3), single)
    assert not any(dd(i, j) for i in range(3) for j in range(3))


def test_digraph_p4():
    dd = domination_digraph(gen.path(4), VertexPartition([[2, 3], [1], [0]]))
    assert dd(0, 1) and not dd(0, 2) and dd(1, 2)
    assert not dd(1, 0) and not dd(2, 0)
    assert not dd.is_complete()


def test_classify_examples():
    kind = classify_partition(gen.path(4), VertexPartition([[0, 3], [2], [1]]))
    assert kind.grundy and kind.transitive and kind.upper_domatic
    kind = classify_partition(gen.complete(2), VertexPartition([[0], [1]]))
    assert kind.domatic and kind.transitive and kind.grundy
    kind = classify_partition(gen.cycle(4), C4_TRANSITIVE)
    assert kind.transitive and not kind.grundy


def test_sources_sinks():
    dd = domination_digraph(gen.complete(3), VertexPartition([[0], [1], [2]]))
    assert sources(dd) == sinks(dd) == [0, 1, 2]
    dd = domination_digraph(gen.cycle(4), C4_TRANSITIVE)
    # {1} and {0} dominate each other through the edge 0-1
    assert sources(dd) == [0] and sinks(dd) == [1, 2]
    assert in_degrees(dd) == [0, 2, 2]
    dd = domination_digraph(gen.empty(2), VertexPartition([[0], [1]]))
    assert sources(dd) == sinks(dd) == [] and not dd.is_complete()
    dd = domination_digraph(gen.complete(5), VertexPartition([[i] for i in range(5)]))
    assert in_degrees(dd) == [4] * 5


@pytest.mark.parametrize("blocks", [[[0], [0, 1]], [[0], []], [[0, 1]]])
def test_invalid_partitions(blocks):
    with pytest.raises(PartitionError):
        VertexPartition(blocks).validate(3)


def test_parse_partition():
    pi = parse_partition("2 3  # top\n1\n\n0\n")
    assert pi.as_lists() == [[2, 3], [1], [0]]
    with pytest.raises(ParseError):
        parse_partition("0 x\n")


@given(graphs(min_n=1, max_n=7), st.data())
def test_kind_hierarchy(g, data):
    labels = data.draw(st.lists(st.integers(0, g.n - 1), min_size=g.n, max_size=g.n))
    pi = VertexPartition.from_labels(labels)
    kind = classify_partition(g, pi)
    if kind.grundy:
        assert kind.transitive
    if kind.transitive:
        assert kind.upper_domatic
        assert sinks(domination_digraph(g, pi)) and sources(domination_digraph(g, pi))
    if kind.domatic and pi.k > 1:
        assert kind.upper_domatic
    if pi.k <= 5:
        order = domination_digraph(g, pi).transitive_order()
        some = any(classify_partition(g, pi.reordered(p)).transitive for p in permutations(range(pi.k)))
        assert (order is not None) == some
