"""Transitive numbers on trees.

Every function works on the tree component of ``root`` inside a host graph
after deleting a set of ``banned`` vertices.  This lets the unicyclic solver
ask questions about pieces of its graph (a cycle with one vertex removed,
that tree with one more path vertex removed, ...) without building copies.

A transitive partition is handled as a labelling: vertex v sits in block
``s(v)`` and needs neighbours in every block 1..s(v)-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graph import Graph, GraphClassError, is_tree
from .oracle import SolveResult
from .partition import VertexPartition


def z_value(values: Iterable[int]) -> int:
    """Longest sorted subsequence whose q-th entry is at least q, taken greedily."""
    z = 0
    for v in sorted(values):
        if v >= z + 1:
            z += 1
    return z


def z_pick(values: Mapping[int, int]) -> list[int]:
    """Keys realising ``z_value``: smallest values first, ties by lower key."""
    picked = []
    for key in sorted(values, key=lambda k: (values[k], k)):
        if values[key] >= len(picked) + 1:
            picked.append(key)
    return picked


# -- rooted trees ------------------------------------------------------------


@dataclass
class RootedTreeDP:
    root: int
    parent: dict[int, int | None]
    children: dict[int, list[int]]
    order: list[int]  # BFS order from the root
    tr: dict[int, int] = field(default_factory=dict)

    @property
    def vertices(self) -> list[int]:
        return self.order

    def child_values(self, v: int) -> dict[int, int]:
        return {c: self.tr[c] for c in self.children[v]}


def root_tree(g: Graph, root: int, banned: Iterable[int] = ()) -> RootedTreeDP:
    banned = set(banned)
    if root in banned:
        raise ValueError("root is banned")
    parent: dict[int, int | None] = {root: None}
    children: dict[int, list[int]] = {root: []}
    order = [root]
    edges = 0
    for v in order:
        for w in sorted(g.neighbors(v)):
            if w in banned:
                continue
            edges += 1
            if w in parent:
                continue
            parent[w] = v
            children[w] = []
            children[v].append(w)
            order.append(w)
    if edges // 2 != len(order) - 1:
        raise GraphClassError("component is not a tree")
    return RootedTreeDP(root, parent, children, order)


def rooted_transitive_numbers(g: Graph, root: int, banned: Iterable[int] = ()) -> RootedTreeDP:
    """Bottom-up ``t^r(v) = 1 + z_value(children)``; leaves get 1."""
    dp = root_tree(g, root, banned)
    for v in reversed(dp.order):
        dp.tr[v] = 1 + z_value(dp.tr[c] for c in dp.children[v])
    return dp


def transitive_number(x: int, g: Graph, banned: Iterable[int] = ()) -> int:
    """Largest block index of x over transitive partitions of x's tree component."""
    return rooted_transitive_numbers(g, x, banned).tr[x]


def transitivity_tree(g: Graph) -> SolveResult:
    """Tr(T) = D(T) for a tree, with a witness built top-down from the best root."""
    if not is_tree(g):
        raise GraphClassError("graph is not a tree")
    best = max(range(g.n), key=lambda x: (transitive_number(x, g), -x))
    dp = rooted_transitive_numbers(g, best)
    labels = assign_top_down(dp, {best: dp.tr[best]})
    pi = labels_to_partition(labels, g.n)
    return SolveResult(dp.tr[best], pi, "tree")


def assign_top_down(dp: RootedTreeDP, start: dict[int, int]) -> dict[int, int]:
    """Labels for the rooted tree given the root's label (at most its t^r).

    Each vertex hands labels 1..b-1 to children able to reach them, smallest
    capable child first; children not needed go to block 1.
    """
    labels = dict(start)
    for v in dp.order:
        b = labels[v]
        kids = sorted(dp.children[v], key=lambda c: (dp.tr[c], c))
        used = set()
        for need in range(1, b):
            c = next((c for c in kids if c not in used and dp.tr[c] >= need), None)
            if c is None:
                raise AssertionError(f"vertex {v} cannot reach block {b}")
            used.add(c)
            labels[c] = need
        for c in kids:
            labels.setdefault(c, 1)
    return labels


def labels_to_partition(labels: Mapping[int, int], n: int) -> VertexPartition:
    k = max(labels.values())
    blocks: list[list[int]] = [[] for _ in range(k)]
    for v in range(n):
        blocks[labels[v] - 1].append(v)
    return VertexPartition(blocks)


# -- where the children of a root can sit ------------------------------------


def _coverable(required: list[int], caps: list[int]) -> bool:
    """Can distinct vertices with reach ``caps`` (any label 1..cap) take every required label?"""
    caps = sorted(caps, reverse=True)
    for i, r in enumerate(sorted(required, reverse=True)):
        if i >= len(caps) or caps[i] < r:
            return False
    return True


def allowed_positions(g: Graph, x: int, child: int, banned: Iterable[int] = ()) -> set[int]:
    """Blocks the child may occupy when x sits in block ``1 + z`` of an order-(1+z) partition.

    Exact: the child needs a position it can reach on its own side, and the
    remaining children must still cover every other block below x.
    """
    dp = rooted_transitive_numbers(g, x, banned)
    if child not in dp.children[x]:
        raise ValueError(f"{child} is not a child of {x}")
    top = dp.tr[x]
    z = top - 1
    others = [dp.tr[c] for c in dp.children[x] if c != child]
    return {
        i
        for i in range(1, min(dp.tr[child], top) + 1)
        if _coverable([r for r in range(1, z + 1) if r != i], others)
    }


def interval_position_range(values: Mapping[int, int], child: int) -> set[int]:
    """Position range for a child that belongs to the greedy realising subsequence.

    Upward ``j..min(l, z)`` where j is the child's slot; downward to 1 when a
    spare child reaches j, else down to the least r with every slot t in
    r..j-1 held by a child of reach at least t+1 (empty when none exists).
    """
    picked = z_pick(values)
    if child not in picked:
        raise ValueError("child is not in the realising subsequence")
    z = len(picked)
    j = picked.index(child) + 1
    out = set(range(j, min(values[child], z) + 1))
    spares = [c for c in values if c not in picked]
    if j > 1 and any(values[c] >= j for c in spares):
        out |= set(range(1, j))
        return out
    r = None
    for t in range(j - 1, 0, -1):
        if values[picked[t - 1]] >= t + 1:
            r = t
        else:
            break
    if r is not None:
        out |= set(range(r, j))
    return out


# -- labellings with pinned positions ----------------------------------------


def _match(required: list[int], options: list[set[int]]) -> list[int | None] | None:
    """Assign each required label to a distinct option holder (augmenting paths)."""
    owner: dict[int, int] = {}
    for r in required:
        seen: set[int] = set()

        def augment(label: int) -> bool:
            for i, opts in enumerate(options):
                if label in opts and i not in seen:
                    seen.add(i)
                    if i not in owner.values() or augment(next(k for k, o in owner.items() if o == i)):
                        owner[label] = i
                        return True
            return False

        if not augment(r):
            return None
    out: list[int | None] = [None] * len(options)
    for label, i in owner.items():
        out[i] = label
    return out


class PinnedLabeler:
    """Exact transitive labellings of a tree with some positions prescribed.

    ``feasible[v][a]`` is the set of labels v can take when its parent has
    label a (0 for the root), counting only constraints inside v's subtree.
    """

    def __init__(self, g: Graph, root: int, pins: Mapping[int, int] | None = None, banned: Iterable[int] = ()):
        self.dp = root_tree(g, root, banned)
        self.pins = dict(pins or {})
        ch, par = self.dp.children, self.dp.parent
        self.cands: dict[int, list[int]] = {}
        for v in self.dp.order:
            deg = len(ch[v]) + (par[v] is not None)
            self.cands[v] = [self.pins[v]] if v in self.pins else list(range(1, deg + 2))
        self.feasible: dict[int, dict[int, set[int]]] = {}
        for v in reversed(self.dp.order):
            p = par[v]
            parent_labels = self.cands[p] if p is not None else [0]
            self.feasible[v] = {a: {b for b in self.cands[v] if self._fits(v, b, a)} for a in parent_labels}

    def _fits(self, v: int, b: int, a: int) -> bool:
        return self._cover(v, b, a) is not None

    def _cover(self, v: int, b: int, a: int) -> list[int | None] | None:
        kids = self.dp.children[v]
        options = [self.feasible[c][b] for c in kids]
        if any(not o for o in options):
            return None
        required = [r for r in range(1, b) if r != a]
        return _match(required, options)

    def root_positions(self) -> set[int]:
        return set(self.feasible[self.dp.root][0])

    def labeling(self, root_label: int | None = None) -> dict[int, int] | None:
        """One labelling (preferring block 1 for spare vertices), or None."""
        root = self.dp.root
        options = self.feasible[root][0]
        if not options:
            return None
        b = max(options) if root_label is None else root_label
        if b not in options:
            return None
        labels = {root: b}
        for v in self.dp.order:
            b = labels[v]
            p = self.dp.parent[v]
            a = labels[p] if p is not None else 0
            assigned = self._cover(v, b, a)
            for c, lab in zip(self.dp.children[v], assigned):
                labels[c] = lab if lab is not None else min(self.feasible[c][b])
        return labels


def position_set(g: Graph, target: int, pins: Mapping[int, int] | None = None, banned: Iterable[int] = ()) -> set[int]:
    """All blocks target can occupy in transitive partitions respecting the pins."""
    return PinnedLabeler(g, target, pins, banned).root_positions()


def pinned_labeling(g: Graph, root: int, pins: Mapping[int, int], banned: Iterable[int] = ()) -> dict[int, int] | None:
    lab = PinnedLabeler(g, root, pins, banned)
    return lab.labeling(pins.get(root))


def constrained_max(g: Graph, v_p: int, v_q: int, l_q: int, banned: Iterable[int] = ()) -> int:
    """Max block of v_p over transitive partitions putting v_q in block l_q; 0 if none."""
    return max(position_set(g, v_p, {v_q: l_q}, banned), default=0)
