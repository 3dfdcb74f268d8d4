"""Exhaustive ground truth for D, Tr, Grundy and domatic numbers.

Set partitions are generated as restricted growth strings over a fixed
vertex order.  A vertex is *closed* once it and all of its neighbours are
placed; from then on the set of blocks that can still dominate its block is
known exactly, which lets the search discard partial assignments in which
some pair of blocks can no longer be related.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .graph import Graph
from .partition import (
    DominationDigraph,
    VertexPartition,
    classify_partition,
    domination_digraph,
    sinks,
    sources,
)

MODES = ("upper", "transitive", "grundy", "domatic")


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: VertexPartition
    method: str = "oracle"


def enumerate_partitions(n: int, k: int) -> Iterator[VertexPartition]:
    """Every partition of 0..n-1 into exactly k nonempty blocks, as restricted growth strings."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    label = [0] * n

    def rec(i: int, opened: int) -> Iterator[VertexPartition]:
        if n - i < k - opened:
            return
        if i == n:
            yield VertexPartition.from_labels(label)
            return
        for b in range(min(opened + 1, k)):
            label[i] = b
            yield from rec(i + 1, max(opened, b + 1))

    return rec(0, 0)


def search_order(g: Graph) -> list[int]:
    """Maximum cardinality search from a maximum-degree vertex; ties by degree then id."""
    n = g.n
    if n == 0:
        return []
    weight = [0] * n
    placed = [False] * n
    order = []
    for _ in range(n):
        v = max(
            (u for u in range(n) if not placed[u]),
            key=lambda u: (weight[u], g.degree(u), -u),
        )
        placed[v] = True
        order.append(v)
        for w in g.neighbors(v):
            weight[w] += 1
    return order


def _peel(possible: list[int], opened: int) -> list[int] | None:
    """Greedy transitive ordering of blocks 0..opened-1; ``possible[j]`` masks blocks able to dominate j."""
    left = list(range(opened))
    out = []
    while left:
        for i in left:
            bit = 1 << i
            if all(possible[j] & bit for j in left if j != i):
                out.append(i)
                left.remove(i)
                break
        else:
            return None
    return out


def iter_assignments(g: Graph, k: int, mode: str, visit: Callable[[list[int], list[int] | None], bool]) -> None:
    """Depth-first enumeration of k-block partitions of the given kind.

    ``visit(labels, order)`` receives per-vertex block labels (a restricted
    growth string in search order) and, for ordered kinds, a transitive block
    order.  Returning True stops the enumeration.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    n = g.n
    if k < 1 or k > n:
        return
    order = search_order(g)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    closes: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        last = max([pos[v]] + [pos[w] for w in g.neighbors(v)])
        closes[last].append(v)
    masks = g.masks
    nbrs = [tuple(g.neighbors(v)) for v in range(n)]
    full = (1 << k) - 1
    ordered = mode in ("transitive", "grundy")
    grundy = mode == "grundy"
    domatic = mode == "domatic"

    label = [-1] * n
    bmask = [0] * k
    possible = [full] * k
    stop = False

    def close(v: int, opened: int) -> bool:
        j = label[v]
        hit = 0
        for w in nbrs[v]:
            hit |= 1 << label[w]
        if domatic:
            return (hit | (1 << j)) == full
        old = possible[j]
        possible[j] = old & hit
        if possible[j] == old:
            return True
        pj = possible[j]
        jb = 1 << j
        for i in range(opened):
            if i != j and not (pj >> i) & 1 and not possible[i] & jb:
                return False
        return True

    def rec(idx: int, opened: int) -> None:
        nonlocal stop
        if idx == n:
            if opened != k:
                return
            blk_order = None
            if ordered:
                blk_order = _peel(possible, k)
                if blk_order is None:
                    return
            if visit(list(label), blk_order):
                stop = True
            return
        if n - idx < k - opened:
            return
        v = order[idx]
        top = opened + 1 if opened < k else k
        for b in range(top):
            if grundy and masks[v] & bmask[b]:
                continue
            label[v] = b
            bmask[b] |= 1 << v
            saved = possible[:]
            new_opened = opened + 1 if b == opened else opened
            ok = True
            for c in closes[idx]:
                if not close(c, new_opened):
                    ok = False
                    break
            if ok and ordered and closes[idx] and _peel(possible, new_opened) is None:
                ok = False
            if ok:
                rec(idx + 1, new_opened)
            possible[:] = saved
            bmask[b] &= ~(1 << v)
            label[v] = -1
            if stop:
                return

    rec(0, 0)


def _to_partition(labels: list[int], blk_order: list[int] | None) -> VertexPartition:
    pi = VertexPartition.from_labels(labels)
    if blk_order is not None:
        pi = pi.reordered(blk_order)
    return pi


def find_partition(g: Graph, k: int, mode: str) -> VertexPartition | None:
    found: list[VertexPartition] = []

    def visit(labels, blk_order):
        found.append(_to_partition(labels, blk_order))
        return True

    iter_assignments(g, k, mode, visit)
    return found[0] if found else None


def iter_partitions(g: Graph, k: int, mode: str) -> Iterator[VertexPartition]:
    """All k-block partitions of the given kind, each set partition once."""
    out: list[VertexPartition] = []
    iter_assignments(g, k, mode, lambda labels, o: out.append(_to_partition(labels, o)) or False)
    return iter(out)


def _ascending(g: Graph, mode: str, hi: int) -> SolveResult:
    best = VertexPartition([range(g.n)])
    value = 1
    for k in range(2, hi + 1):
        pi = find_partition(g, k, mode)
        if pi is None:
            break
        best, value = pi, k
    return SolveResult(value, best)


def _descending(g: Graph, mode: str, hi: int) -> SolveResult:
    for k in range(hi, 0, -1):
        pi = find_partition(g, k, mode)
        if pi is not None:
            return SolveResult(k, pi)
    raise AssertionError("no partition of order 1")


def _cap(g: Graph) -> int:
    return min(g.n, g.max_degree + 1)


def upper_domatic_bf(g: Graph) -> SolveResult:
    """D(G) with a witness D-partition."""
    _require_vertices(g)
    return _ascending(g, "upper", _cap(g))


def transitivity_bf(g: Graph) -> SolveResult:
    """Tr(G) with a witness whose blocks are in transitive order."""
    _require_vertices(g)
    return _ascending(g, "transitive", _cap(g))


def grundy_bf(g: Graph) -> SolveResult:
    _require_vertices(g)
    return _descending(g, "grundy", _cap(g))


def domatic_bf(g: Graph) -> SolveResult:
    _require_vertices(g)
    return _ascending(g, "domatic", min(g.n, g.min_degree + 1))


def _require_vertices(g: Graph) -> None:
    if g.n < 1:
        raise ValueError("the oracle needs at least one vertex")


def all_D_partitions(g: Graph, D: int | None = None) -> Iterator[VertexPartition]:
    if D is None:
        D = upper_domatic_bf(g).value
    return iter_partitions(g, D, "upper")


def _first_D_partition(g: Graph, test: Callable[[DominationDigraph], bool], D: int | None) -> VertexPartition | None:
    if D is None:
        D = upper_domatic_bf(g).value
    found: list[VertexPartition] = []

    def visit(labels, _):
        pi = VertexPartition.from_labels(labels)
        if test(domination_digraph(g, pi)):
            found.append(pi)
            return True
        return False

    iter_assignments(g, D, "upper", visit)
    return found[0] if found else None


def exists_sink_D_partition(g: Graph, D: int | None = None) -> VertexPartition | None:
    return _first_D_partition(g, lambda dd: bool(sinks(dd)), D)


def exists_source_D_partition(g: Graph, D: int | None = None) -> VertexPartition | None:
    return _first_D_partition(g, lambda dd: bool(sources(dd)), D)


# -- ordered labellings: per-vertex positions -------------------------------


def iter_transitive_labelings(g: Graph, pins: dict[int, int] | None = None) -> Iterator[list[int]]:
    """Every ordered transitive partition as a 1-based block index per vertex.

    A labelling is transitive iff each vertex at position s has neighbours at
    every position 1..s-1.  Positions are bounded by degree + 1.
    """
    pins = pins or {}
    n = g.n
    order = search_order(g)
    pos = {v: i for i, v in enumerate(order)}
    closes: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        closes[max([pos[v]] + [pos[w] for w in g.neighbors(v)])].append(v)
    nbrs = [tuple(g.neighbors(v)) for v in range(n)]
    label = [0] * n
    out: list[list[int]] = []

    def covered(v: int) -> bool:
        need = (1 << label[v]) - 2  # bits 1..label-1
        have = 0
        for w in nbrs[v]:
            have |= 1 << label[w]
        return have & need == need

    def rec(idx: int) -> None:
        if idx == n:
            out.append(list(label))
            return
        v = order[idx]
        choices = [pins[v]] if v in pins else range(1, len(nbrs[v]) + 2)
        for s in choices:
            label[v] = s
            if all(covered(c) for c in closes[idx]):
                rec(idx + 1)
        label[v] = 0

    if n:
        rec(0)
    return iter(out)


def transitive_number_bf(g: Graph, x: int) -> int:
    """Largest block index of x over all transitive partitions of g."""
    return max(lab[x] for lab in iter_transitive_labelings(g))


def constrained_position_max(g: Graph, v_p: int, v_q: int, l_q: int) -> int:
    """Max block index of v_p over transitive partitions with v_q in block l_q; 0 if none."""
    if l_q < 1:
        return 0
    best = 0
    for lab in iter_transitive_labelings(g, {v_q: l_q}):
        best = max(best, lab[v_p])
    return best


def achievable_pairs(g: Graph, a: int, b: int) -> set[tuple[int, int]]:
    """All (position of a, position of b) pairs realised by transitive partitions."""
    return {(lab[a], lab[b]) for lab in iter_transitive_labelings(g)}


def verify_kind(g: Graph, pi: VertexPartition, mode: str) -> bool:
    kind = classify_partition(g, pi)
    return {
        "upper": kind.upper_domatic,
        "transitive": kind.transitive,
        "grundy": kind.grundy,
        "domatic": kind.domatic,
    }[mode]
