"""Complements of bipartite graphs: a source-set transformation for upper
domatic partitions, and D(G) = Tr(G)."""

from __future__ import annotations

from .graph import Bipartition, Graph, GraphClassError, bipartition, complement
from .oracle import SolveResult, transitivity_bf
from .partition import (
    PartitionError,
    VertexPartition,
    domination_digraph,
    is_upper_domatic,
    sources,
)


class TransformError(AssertionError):
    """The swapped partition failed verification."""


def cobipartition(g: Graph) -> Bipartition:
    """Two cliques covering V, from a 2-colouring of the complement."""
    part = bipartition(complement(g))
    if part is None:
        raise GraphClassError("graph is not co-bipartite")
    return part


def _check_sides(g: Graph, sides: Bipartition) -> None:
    if sides.X | sides.Y != frozenset(range(g.n)) or sides.X & sides.Y:
        raise ValueError("sides do not partition V")
    for side in (sides.X, sides.Y):
        for a in side:
            if not side - {a} <= g.neighbors(a):
                raise ValueError("a side is not a clique")


def source_set_transform(g: Graph, pi: VertexPartition, sides: Bipartition | None = None) -> VertexPartition:
    """An upper domatic partition of the same order that has a source block.

    A block meeting both cliques already dominates everything.  Otherwise the
    first block of size >= 2 either dominates all others or fails to dominate
    some block on the other side; swapping one vertex between the two then
    creates a block meeting both cliques.
    """
    sides = sides or cobipartition(g)
    _check_sides(g, sides)
    pi.validate(g.n)
    dd = domination_digraph(g, pi)
    if not dd.is_complete():
        raise ValueError("partition is not upper domatic")
    blocks = [set(b) for b in pi.blocks]
    if any(b & sides.X and b & sides.Y for b in blocks) or all(len(b) == 1 for b in blocks):
        return pi
    i = next(i for i, b in enumerate(blocks) if len(b) >= 2)
    missed = [j for j in range(pi.k) if j != i and not dd(i, j)]
    if not missed:
        return pi
    j = missed[0]
    x, y = min(blocks[i]), min(blocks[j])
    blocks[i] = blocks[i] - {x} | {y}
    blocks[j] = blocks[j] - {y} | {x}
    out = VertexPartition(blocks)
    if not is_upper_domatic(g, out) or not sources(domination_digraph(g, out)):
        raise TransformError(f"swap of {x} and {y} failed on {g!r} with {pi.as_lists()}")
    return out


def upper_domatic_cobipartite(g: Graph) -> SolveResult:
    """D(G), computed as Tr(G) by exhaustive search, with a transitive witness."""
    cobipartition(g)
    res = transitivity_bf(g)
    return SolveResult(res.value, res.witness, "cobip")
