"""Vertex partitions, the block dominance relation and partition classification."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, ParseError


class PartitionError(ValueError):
    """A block list that is not a partition of V(G)."""


@dataclass(frozen=True)
class VertexPartition:
    """Ordered blocks ``V_1..V_k``; index 0 in Python is block 1."""

    blocks: tuple[frozenset[int], ...]

    def __init__(self, blocks: Iterable[Iterable[int]]):
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in blocks))

    @property
    def k(self) -> int:
        return len(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __getitem__(self, i: int) -> frozenset[int]:
        return self.blocks[i]

    def __iter__(self):
        return iter(self.blocks)

    def block_of(self) -> dict[int, int]:
        return {v: i for i, b in enumerate(self.blocks) for v in b}

    def validate(self, n: int) -> None:
        seen: set[int] = set()
        for i, b in enumerate(self.blocks):
            if not b:
                raise PartitionError(f"block {i + 1} is empty")
            if seen & b:
                raise PartitionError(f"block {i + 1} overlaps an earlier block")
            seen |= b
        if seen != set(range(n)):
            missing = sorted(set(range(n)) - seen)
            extra = sorted(seen - set(range(n)))
            raise PartitionError(f"blocks do not cover V: missing {missing}, unknown {extra}")

    def is_valid(self, n: int) -> bool:
        try:
            self.validate(n)
        except PartitionError:
            return False
        return True

    def reordered(self, order: Sequence[int]) -> "VertexPartition":
        return VertexPartition(self.blocks[i] for i in order)

    def canonical(self) -> "VertexPartition":
        """Blocks sorted by their smallest vertex; used to compare unordered partitions."""
        return VertexPartition(sorted(self.blocks, key=min))

    def as_lists(self) -> list[list[int]]:
        return [sorted(b) for b in self.blocks]

    def to_text(self) -> str:
        return "".join(" ".join(map(str, sorted(b))) + "\n" for b in self.blocks)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "VertexPartition":
        """From a per-vertex block index (0-based), e.g. a restricted growth string.

        Unused label values are skipped, so the result never has empty blocks.
        """
        k = max(labels) + 1 if labels else 0
        blocks: list[list[int]] = [[] for _ in range(k)]
        for v, b in enumerate(labels):
            blocks[b].append(v)
        blocks = [b for b in blocks if b]
        return cls(blocks)


def parse_partition(text: str) -> VertexPartition:
    """One block per line, vertices separated by whitespace; ``#`` starts a comment."""
    blocks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if not all(t.isdigit() for t in tokens):
            raise ParseError(f"block must list non-negative integers, got {raw!r}", lineno)
        blocks.append([int(t) for t in tokens])
    return VertexPartition(blocks)


def _mask(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def dominates(g: Graph, A: Iterable[int], B: Iterable[int]) -> bool:
    """Every vertex of B has a neighbour in A (open neighbourhoods, A and B disjoint)."""
    A, B = set(A), set(B)
    if A & B:
        raise ValueError("dominates() requires disjoint vertex sets")
    amask = _mask(A)
    return all(g.nbr_mask(b) & amask for b in B)


def is_dominating_set(g: Graph, S: Iterable[int]) -> bool:
    smask = _mask(S)
    return all((smask >> v) & 1 or g.nbr_mask(v) & smask for v in range(g.n))


@dataclass(frozen=True)
class DominationDigraph:
    """``relation[i][j]`` is True iff block i dominates block j (diagonal is False)."""

    relation: tuple[tuple[bool, ...], ...]

    @property
    def k(self) -> int:
        return len(self.relation)

    def __call__(self, i: int, j: int) -> bool:
        return self.relation[i][j]

    def out_degrees(self) -> list[int]:
        return [sum(row) for row in self.relation]

    def in_degrees(self) -> list[int]:
        return [sum(self.relation[i][j] for i in range(self.k)) for j in range(self.k)]

    def is_complete(self) -> bool:
        r = self.relation
        return all(r[i][j] or r[j][i] for i in range(self.k) for j in range(i + 1, self.k))

    def is_transitive_order(self) -> bool:
        r = self.relation
        return all(r[i][j] for i in range(self.k) for j in range(i + 1, self.k))

    def transitive_order(self) -> list[int] | None:
        """An ordering of the blocks in which every block dominates all later ones.

        Peeling any current source is safe: moving a source of the remaining
        blocks to the front of a valid ordering keeps it valid.
        """
        r = self.relation
        left = list(range(self.k))
        order = []
        while left:
            src = next((i for i in left if all(r[i][j] for j in left if j != i)), None)
            if src is None:
                return None
            order.append(src)
            left.remove(src)
        return order

    def to_json(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.relation]


def domination_digraph(g: Graph, pi: VertexPartition) -> DominationDigraph:
    masks = [_mask(b) for b in pi.blocks]
    rel = []
    for i, a in enumerate(masks):
        row = []
        for j, b in enumerate(pi.blocks):
            row.append(i != j and all(g.nbr_mask(v) & a for v in b))
        rel.append(tuple(row))
    return DominationDigraph(tuple(rel))


def sources(dd: DominationDigraph) -> list[int]:
    return [i for i, d in enumerate(dd.out_degrees()) if d == dd.k - 1]


def sinks(dd: DominationDigraph) -> list[int]:
    return [j for j, d in enumerate(dd.in_degrees()) if d == dd.k - 1]


def in_degrees(dd: DominationDigraph) -> list[int]:
    return dd.in_degrees()


@dataclass(frozen=True)
class PartitionKind:
    upper_domatic: bool
    transitive: bool
    domatic: bool
    grundy: bool

    def holds(self, kind: str) -> bool:
        return getattr(self, kind.replace("-", "_"))

    def as_dict(self) -> dict[str, bool]:
        return {
            "upper_domatic": self.upper_domatic,
            "transitive": self.transitive,
            "domatic": self.domatic,
            "grundy": self.grundy,
        }


def is_independent(g: Graph, block: Iterable[int]) -> bool:
    bmask = _mask(block)
    return all(not g.nbr_mask(v) & bmask for v in block)


def classify_partition(g: Graph, pi: VertexPartition, dd: DominationDigraph | None = None) -> PartitionKind:
    pi.validate(g.n)
    dd = dd or domination_digraph(g, pi)
    k = dd.k
    upper = dd.is_complete()
    transitive = dd.is_transitive_order()
    domatic = all(dd(i, j) for i in range(k) for j in range(k) if i != j) and all(
        is_dominating_set(g, b) for b in pi.blocks
    )
    grundy = transitive and all(is_independent(g, b) for b in pi.blocks)
    return PartitionKind(upper, transitive, domatic, grundy)


def is_upper_domatic(g: Graph, pi: VertexPartition) -> bool:
    return pi.is_valid(g.n) and domination_digraph(g, pi).is_complete()


def is_transitive(g: Graph, pi: VertexPartition) -> bool:
    return pi.is_valid(g.n) and domination_digraph(g, pi).is_transitive_order()


def has_sink(g: Graph, pi: VertexPartition) -> bool:
    return bool(sinks(domination_digraph(g, pi)))


def has_source(g: Graph, pi: VertexPartition) -> bool:
    return bool(sources(domination_digraph(g, pi)))


def report(g: Graph, pi: VertexPartition) -> dict:
    """JSON-ready summary of a partition: digraph, kind flags, sources, sinks."""
    dd = domination_digraph(g, pi)
    kind = classify_partition(g, pi, dd)
    return {
        "k": dd.k,
        "blocks": pi.as_lists(),
        "digraph": dd.to_json(),
        "kind": kind.as_dict(),
        "sources": [i + 1 for i in sources(dd)],
        "sinks": [j + 1 for j in sinks(dd)],
        "in_degrees": dd.in_degrees(),
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)
