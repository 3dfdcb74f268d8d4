import pytest
from hypothesis import given

from updomatic import generators as gen
from updomatic.graph import GraphClassError, SplitCertificate, split_certificate
from updomatic.oracle import transitivity_bf, upper_domatic_bf
from updomatic.partition import is_transitive
from updomatic.split import upper_domatic_split

from .conftest import split_graphs


def test_paw():
    # clique {0,1,2}, pendant 3 on 0: vertices 1 and 2 have no independent neighbour
    res = upper_domatic_split(gen.paw())
    assert res.value == 3 == upper_domatic_bf(gen.paw()).value


def test_net():
    assert upper_domatic_split(gen.net()).value == 4 == upper_domatic_bf(gen.net()).value


def test_complete():
    res = upper_domatic_split(gen.complete(5))
    assert res.value == 5 and res.witness.k == 5


def test_star_with_normalised_clique():
    g = gen.star(3)
    cert = SplitCertificate(frozenset({2, 3}), frozenset({0, 1}))
    assert upper_domatic_split(g, cert).value == 2 == upper_domatic_bf(g).value


def test_rejects_non_maximum_clique():
    g = gen.star(3)
    with pytest.raises(ValueError):
        upper_domatic_split(g, SplitCertificate(frozenset({1, 2, 3}), frozenset({0})))


def test_rejects_non_split():
    with pytest.raises(GraphClassError):
        upper_domatic_split(gen.cycle(4))


@pytest.mark.parametrize("n", range(1, 8))
def test_exhaustive(n):
    for g in gen.split_graphs(n):
        res = upper_domatic_split(g)
        assert res.value == upper_domatic_bf(g).value == transitivity_bf(g).value


@given(split_graphs(max_n=10))
def test_random(g):
    res = upper_domatic_split(g)
    assert res.value == upper_domatic_bf(g).value
    assert is_transitive(g, res.witness)
    assert res.value in (split_certificate(g).omega, split_certificate(g).omega + 1)
