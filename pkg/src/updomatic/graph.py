"""Simple undirected graphs, text ingestion and class recognition."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator


class ParseError(ValueError):
    """Malformed graph or partition text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphClassError(ValueError):
    """Raised when a solver receives a graph outside its class."""


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Adjacency is stored both as frozensets (for readability) and as
    integer bitmasks (for the exhaustive search hot loops).
    """

    __slots__ = ("n", "m", "_adj", "_mask", "names")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), names=None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(a) for a in adj)
        self.m = sum(len(a) for a in adj) // 2
        self._mask = tuple(sum(1 << w for w in a) for a in adj)
        self.names = tuple(names) if names is not None else None

    # -- basic queries -------------------------------------------------
    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def nbr_mask(self, v: int) -> int:
        return self._mask[v]

    @property
    def masks(self) -> tuple[int, ...]:
        return self._mask

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._mask))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    # -- derived graphs ------------------------------------------------
    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..len-1``; also returns the old labels."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u in old for v in self._adj[u] if v in index and u < v]
        return Graph(len(old), edges), old

    def without(self, removed: Iterable[int]) -> tuple["Graph", list[int]]:
        gone = set(removed)
        return self.induced(v for v in range(self.n) if v not in gone)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self._adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def to_edge_list(self) -> str:
        lines = [f"n {self.n}"]
        lines += [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_networkx(cls, g) -> "Graph":
        nodes = sorted(g.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls(len(nodes), [(index[u], index[v]) for u, v in g.edges()])

    def graph6(self) -> str:
        import networkx as nx

        return nx.to_graph6_bytes(self.to_networkx(), header=False).decode().strip()

    @classmethod
    def from_graph6(cls, text: str) -> "Graph":
        import networkx as nx

        return cls.from_networkx(nx.from_graph6_bytes(text.strip().encode()))


# -- parsing -------------------------------------------------------------

_COMMENT = re.compile(r"#.*$")


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines with an optional ``n <count>`` header.

    Blank lines and ``#`` comments are ignored; duplicate edges collapse.
    """
    n_header = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _COMMENT.sub("", raw).strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError("header must be 'n <count>'", lineno)
            if n_header is not None:
                raise ParseError("duplicate 'n' header", lineno)
            n_header = int(tokens[1])
            continue
        if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
            raise ParseError(f"expected two non-negative integers, got {raw!r}", lineno)
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v))
    top = 1 + max((max(e) for e in edges), default=-1)
    if n_header is None:
        n = top
    else:
        if top > n_header:
            raise ParseError(f"vertex label {top - 1} exceeds declared n={n_header}")
        n = n_header
    return Graph(n, edges)


def parse_dimacs(text: str) -> Graph:
    """Parse the DIMACS ``p edge n m`` / ``e u v`` format (1-indexed)."""
    n = declared_m = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if len(tokens) != 4 or tokens[1] not in ("edge", "col") or not (
                tokens[2].isdigit() and tokens[3].isdigit()
            ):
                raise ParseError("problem line must be 'p edge <n> <m>'", lineno)
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            n, declared_m = int(tokens[2]), int(tokens[3])
        elif tokens[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(tokens) != 3 or not (tokens[1].isdigit() and tokens[2].isdigit()):
                raise ParseError(f"malformed edge line {raw!r}", lineno)
            u, v = int(tokens[1]), int(tokens[2])
            for x in (u, v):
                if not 1 <= x <= n:
                    raise ParseError(f"vertex index {x} out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise ParseError(f"unknown line type {tokens[0]!r}", lineno)
    if n is None:
        raise ParseError("missing problem line 'p edge <n> <m>'")
    if declared_m != len(edges):
        raise ParseError(f"declared m={declared_m} but found {len(edges)} distinct edges")
    return Graph(n, sorted(edges))


def complement(g: Graph) -> Graph:
    edges = [
        (u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges)


# -- certificates ---------------------------------------------------------


@dataclass(frozen=True)
class SplitCertificate:
    S: frozenset[int]
    K: frozenset[int]

    @property
    def omega(self) -> int:
        return len(self.K)

    def is_valid(self, g: Graph) -> bool:
        if self.S | self.K != frozenset(range(g.n)) or self.S & self.K:
            return False
        if any(not g.has_edge(a, b) for a, b in combinations(self.K, 2)):
            return False
        return not any(g.has_edge(a, b) for a, b in combinations(self.S, 2))


@dataclass(frozen=True)
class UnicyclicCertificate:
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class ChainCertificate:
    X: tuple[int, ...]
    Y: tuple[int, ...]


@dataclass(frozen=True)
class Bipartition:
    X: frozenset[int]
    Y: frozenset[int]


@dataclass
class Classification:
    tags: set[str] = field(default_factory=set)
    split: SplitCertificate | None = None
    unicyclic: UnicyclicCertificate | None = None
    chain: ChainCertificate | None = None
    cobipartite: Bipartition | None = None
    cochain: ChainCertificate | None = None

    def __contains__(self, tag: str) -> bool:
        return tag in self.tags


TAGS = (
    "Tree",
    "Unicyclic",
    "Split",
    "BipartiteChain",
    "CoBipartite",
    "CoBipartiteChain",
    "TwoK2Free",
    "General",
)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and g.is_connected()


def is_unicyclic(g: Graph) -> bool:
    return g.n >= 3 and g.m == g.n and g.is_connected()


def unique_cycle(g: Graph) -> tuple[int, ...]:
    """The cycle of a unicyclic graph, found by peeling degree-1 vertices."""
    if not is_unicyclic(g):
        raise GraphClassError("graph is not unicyclic")
    deg = g.degrees()
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        alive[v] = False
        for w in g.neighbors(v):
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    core = [v for v in range(g.n) if alive[v]]
    start = core[0]
    cycle = [start]
    prev, cur = None, start
    while True:
        step = min(w for w in g.neighbors(cur) if alive[w] and w != prev)
        if step == start:
            break
        cycle.append(step)
        prev, cur = cur, step
        if len(cycle) > len(core):
            raise AssertionError("2-core is not a simple cycle")
    return tuple(cycle)


def bipartition(g: Graph) -> Bipartition | None:
    """A 2-colouring, or None if the graph has an odd cycle."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if colour[w] < 0:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
                elif colour[w] == colour[v]:
                    return None
    X = frozenset(v for v in range(g.n) if colour[v] == 0)
    return Bipartition(X, frozenset(range(g.n)) - X)


def chain_orderings(g: Graph, part: Bipartition) -> ChainCertificate | None:
    """Nested-neighbourhood orderings of both sides, if they exist."""
    orders = []
    for side in (part.X, part.Y):
        order = sorted(side, key=lambda v: (-g.degree(v), v))
        for a, b in zip(order, order[1:]):
            if not g.neighbors(b) <= g.neighbors(a):
                return None
        orders.append(tuple(order))
    return ChainCertificate(*orders)


def find_induced_2k2(g: Graph) -> tuple[tuple[int, int], tuple[int, int]] | None:
    edges = list(g.edges())
    for (a, b), (c, d) in combinations(edges, 2):
        if len({a, b, c, d}) < 4:
            continue
        if g.has_edge(a, c) or g.has_edge(a, d) or g.has_edge(b, c) or g.has_edge(b, d):
            continue
        return (a, b), (c, d)
    return None


def is_2k2_free(g: Graph) -> bool:
    return find_induced_2k2(g) is None


def split_certificate(g: Graph) -> SplitCertificate | None:
    """Hammer-Simeone degree-sequence test, normalised so that K is a maximum clique."""
    if g.n == 0:
        return None
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    d = [g.degree(v) for v in order]
    m = max(i for i in range(1, g.n + 1) if d[i - 1] >= i - 1)
    if sum(d[:m]) != m * (m - 1) + sum(d[m:]):
        return None
    K = set(order[:m])
    S = set(order[m:])
    # a vertex of S seeing all of K enlarges the clique
    for s in sorted(S):
        if K <= g.neighbors(s):
            S.discard(s)
            K.add(s)
            break
    cert = SplitCertificate(frozenset(S), frozenset(K))
    assert cert.is_valid(g)
    return cert


def classify(g: Graph) -> Classification:
    out = Classification(tags={"General"})
    if is_tree(g):
        out.tags.add("Tree")
    if is_unicyclic(g):
        out.tags.add("Unicyclic")
        out.unicyclic = UnicyclicCertificate(unique_cycle(g))
    cert = split_certificate(g)
    if cert is not None:
        out.tags.add("Split")
        out.split = cert
    part = bipartition(g)
    if part is not None and g.n > 0:
        chain = chain_orderings(g, part)
        if chain is not None:
            out.tags.add("BipartiteChain")
            out.chain = chain
    gc = complement(g)
    copart = bipartition(gc)
    if copart is not None and g.n > 0:
        out.tags.add("CoBipartite")
        out.cobipartite = copart
        cochain = chain_orderings(gc, copart)
        if cochain is not None:
            out.tags.add("CoBipartiteChain")
            out.cochain = cochain
    if is_2k2_free(g):
        out.tags.add("TwoK2Free")
    return out
