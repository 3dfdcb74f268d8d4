"""Named graph families, seeded random instances and exhaustive enumerations."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Iterator

import networkx as nx

from .graph import Graph, bipartition, complement, is_2k2_free, split_certificate


def _check(n: int, least: int, what: str) -> None:
    if n < least:
        raise ValueError(f"{what} needs n >= {least}, got {n}")


def path(n: int) -> Graph:
    _check(n, 1, "path")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _check(n, 3, "cycle")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _check(n, 1, "complete graph")
    return Graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return Graph(n)


def star(n: int) -> Graph:
    """K_{1,n}: centre 0 and ``n`` leaves."""
    _check(n, 1, "star")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def paw() -> Graph:
    return Graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def net() -> Graph:
    return Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def spider(legs: Iterable[int]) -> Graph:
    """Centre 0 with one path of each given length hanging off it."""
    edges, nxt = [], 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return Graph(nxt, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree via a Pruefer sequence."""
    _check(n, 1, "tree")
    rng = random.Random(seed)
    if n <= 2:
        return path(n)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Graph.from_networkx(nx.from_prufer_sequence(seq))


def random_unicyclic(n: int, seed: int) -> Graph:
    """A random tree plus one extra edge between non-adjacent vertices."""
    _check(n, 3, "unicyclic graph")
    rng = random.Random(seed)
    while True:
        t = random_tree(n, rng.randrange(1 << 30))
        non_edges = [(u, v) for u, v in combinations(range(n), 2) if not t.has_edge(u, v)]
        if non_edges:
            u, v = rng.choice(non_edges)
            return Graph(n, list(t.edges()) + [(u, v)])


def random_split(n: int, seed: int, p: float | None = None) -> Graph:
    _check(n, 1, "split graph")
    rng = random.Random(seed)
    k = rng.randint(1, n)
    p = rng.random() if p is None else p
    clique = list(range(k))
    edges = list(combinations(clique, 2))
    for s in range(k, n):
        edges += [(c, s) for c in clique if rng.random() < p]
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, [(perm[u], perm[v]) for u, v in edges])


def random_bipartite_chain(n1: int, n2: int, seed: int) -> Graph:
    """Bipartite chain graph: x_i sees y_0..y_{t_i - 1} with t non-increasing."""
    _check(n1, 1, "chain graph side")
    _check(n2, 1, "chain graph side")
    rng = random.Random(seed)
    reach = sorted((rng.randint(0, n2) for _ in range(n1)), reverse=True)
    edges = [(i, n1 + j) for i, t in enumerate(reach) for j in range(t)]
    return Graph(n1 + n2, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def all_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) labelled graphs on n vertices."""
    if n > 7:
        raise ValueError("labelled enumeration is limited to n <= 7")
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, [e for i, e in enumerate(pairs) if bits >> i & 1])


# -- isomorphism-deduplicated enumerations --------------------------------


class _IsoSet:
    """Collects pairwise non-isomorphic graphs, bucketed by a WL hash."""

    def __init__(self):
        self._buckets: dict[str, list] = {}
        self.graphs: list[Graph] = []

    def add(self, g: Graph) -> bool:
        ng = g.to_networkx()
        key = f"{g.n}:{g.m}:{sorted(g.degrees())}:" + nx.weisfeiler_lehman_graph_hash(
            ng, iterations=3
        )
        bucket = self._buckets.setdefault(key, [])
        for other in bucket:
            if nx.is_isomorphic(ng, other):
                return False
        bucket.append(ng)
        self.graphs.append(g)
        return True


@lru_cache(maxsize=None)
def _atlas_by_order() -> dict[int, tuple[Graph, ...]]:
    from networkx.generators.atlas import graph_atlas_g

    out: dict[int, list[Graph]] = {}
    for g in graph_atlas_g():
        out.setdefault(g.number_of_nodes(), []).append(Graph.from_networkx(g))
    return {k: tuple(v) for k, v in out.items()}


def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class (n <= 7 from the graph atlas, n = 8 by extension)."""
    if n <= 7:
        return _atlas_by_order().get(n, ())
    if n == 8:
        return _extended(7, lambda g: True)
    raise ValueError("exhaustive enumeration supports n <= 8")


@lru_cache(maxsize=None)
def _extended(base_n: int, keep: Callable[[Graph], bool]) -> tuple[Graph, ...]:
    seen = _IsoSet()
    for g in nonisomorphic_graphs(base_n):
        if not keep(g):
            continue
        for bits in range(1 << base_n):
            edges = list(g.edges()) + [(i, base_n) for i in range(base_n) if bits >> i & 1]
            h = Graph(base_n + 1, edges)
            if keep(h):
                seen.add(h)
    return tuple(seen.graphs)


@lru_cache(maxsize=None)
def nonisomorphic_trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    return tuple(Graph.from_networkx(t) for t in nx.nonisomorphic_trees(n))


@lru_cache(maxsize=None)
def unicyclic_graphs(n: int) -> tuple[Graph, ...]:
    """All connected unicyclic graphs on n vertices up to isomorphism."""
    seen = _IsoSet()
    for t in nonisomorphic_trees(n):
        for u, v in combinations(range(n), 2):
            if not t.has_edge(u, v):
                seen.add(Graph(n, list(t.edges()) + [(u, v)]))
    return tuple(seen.graphs)


@lru_cache(maxsize=None)
def bipartite_graphs(n: int) -> tuple[Graph, ...]:
    """All bipartite graphs on n vertices (connected or not) up to isomorphism."""
    if n <= 7:
        return tuple(g for g in nonisomorphic_graphs(n) if bipartition(g) is not None)
    seen = _IsoSet()
    for g in bipartite_graphs(n - 1):
        for bits in range(1 << (n - 1)):
            h = Graph(n, list(g.edges()) + [(i, n - 1) for i in range(n - 1) if bits >> i & 1])
            if bipartition(h) is not None:
                seen.add(h)
    return tuple(seen.graphs)


def cobipartite_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(complement(g) for g in bipartite_graphs(n))


@lru_cache(maxsize=None)
def split_graphs(n: int) -> tuple[Graph, ...]:
    if n <= 7:
        return tuple(g for g in nonisomorphic_graphs(n) if split_certificate(g) is not None)
    raise ValueError("split enumeration supports n <= 7")


def two_k2_free_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in nonisomorphic_graphs(n) if is_2k2_free(g))
