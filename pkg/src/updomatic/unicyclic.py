"""Transitivity, and hence D(G), of unicyclic graphs.

For each root u the vertices are levelled like a BFS tree except that the
cycle occupies two consecutive levels: its vertex nearest to u alone on one
level, every other cycle vertex on the next.  Rooted transitive numbers are
then computed bottom-up.  Only the entry vertex of the cycle has two
children joined by a path avoiding it; for that vertex the pair of values
its two cycle neighbours can take together is worked out from the tree
formed by the rest of the cycle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import Graph, GraphClassError, is_unicyclic, unique_cycle
from .oracle import SolveResult
from .tree import (
    _coverable,
    labels_to_partition,
    pinned_labeling,
    position_set,
    constrained_max,
    transitive_number,
    z_value,
)
from .partition import is_transitive


@dataclass(frozen=True)
class SigmaOrdering:
    root: int
    level: dict[int, int]
    order: tuple[int, ...]  # deepest level first, ends with the root
    entry: int  # cycle vertex nearest to the root
    p: int  # level of the entry vertex
    cycle: tuple[int, ...]

    def rooted_subgraph(self, g: Graph, x: int) -> set[int]:
        """Component of x among x and the vertices on deeper levels."""
        lv = self.level[x]
        seen = {x}
        stack = [x]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in seen and self.level[w] > lv:
                    seen.add(w)
                    stack.append(w)
        return seen

    def children(self, g: Graph, x: int) -> list[int]:
        return sorted(w for w in g.neighbors(x) if self.level[w] > self.level[x])


def _bfs(g: Graph, sources: list[int], allowed=None) -> dict[int, int]:
    dist = {s: 0 for s in sources}
    queue = deque(sources)
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in dist and (allowed is None or w in allowed):
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def sigma_ordering(g: Graph, u: int) -> SigmaOrdering:
    if not is_unicyclic(g):
        raise GraphClassError("graph is not unicyclic")
    cycle = unique_cycle(g)
    on_cycle = set(cycle)
    attach: dict[int, int] = {}
    to_cycle: dict[int, int] = {}
    for c in cycle:
        dist = _bfs(g, [c], allowed={v for v in range(g.n) if v not in on_cycle})
        for v, d in dist.items():
            attach[v] = c
            to_cycle[v] = d
    entry = attach[u]
    p = to_cycle[u]
    from_root = _bfs(g, [u])
    level = {
        v: from_root[v] if attach[v] == entry else p + 1 + to_cycle[v]
        for v in range(g.n)
    }
    # cycle walk from the entry, heading for its lower-id cycle neighbour
    i = cycle.index(entry)
    k = len(cycle)
    fwd = [cycle[(i + s) % k] for s in range(1, k)]
    walk = fwd if fwd[0] < fwd[-1] else fwd[::-1]
    order = []
    for lv in sorted(set(level.values()), reverse=True):
        members = sorted(v for v in level if level[v] == lv)
        if lv == p + 1:
            members = walk + [v for v in members if v not in on_cycle]
        order.extend(members)
    return SigmaOrdering(u, level, tuple(order), entry, p, cycle)


def rooted_subgraph(g: Graph, sigma: SigmaOrdering, x: int) -> set[int]:
    return sigma.rooted_subgraph(g, x)


# -- the two cycle neighbours of the entry vertex ----------------------------


@dataclass
class PathAnalysis:
    v_p: int
    v_q: int
    path: tuple[int, ...]  # v_p ... v_q inside the tree
    banned: frozenset[int]  # everything outside the tree
    l_p: int
    l_q: int
    X: tuple[int, ...]
    Y: tuple[int, ...]
    forced_x: dict[int, int]  # interior vertices of X and their unique blocks
    forced_y: dict[int, int]
    positions_x: dict[int, set[int]]  # blocks each X vertex can take with v_p in block l_p
    positions_y: dict[int, set[int]]
    l_p_prime: int
    l_q_prime: int
    l_p_star: int
    l_q_star: int
    case: str = ""
    pairs: list[tuple[int, int]] = field(default_factory=list)


def _grow(g: Graph, banned: frozenset[int], start: int, rest: tuple[int, ...], target: int) -> list[int]:
    grown = [start]
    for x in rest:
        if transitive_number(start, g, banned | {x}) == target - 1:
            grown.append(x)
        else:
            break
    return grown


def _forced(g: Graph, banned: frozenset[int], seq: list[int]) -> dict[int, int]:
    return {
        seq[j]: transitive_number(seq[j], g, banned | {seq[j - 1]})
        for j in range(1, len(seq) - 1)
    }


def compute_XY(g: Graph, banned: frozenset[int], path: tuple[int, ...]) -> PathAnalysis:
    """X, Y, forced blocks, and the primed and starred endpoint positions."""
    v_p, v_q = path[0], path[-1]
    l_p = transitive_number(v_p, g, banned)
    l_q = transitive_number(v_q, g, banned)
    X = _grow(g, banned, v_p, path[1:], l_p)
    Y = _grow(g, banned, v_q, path[-2::-1], l_q)
    return PathAnalysis(
        v_p=v_p,
        v_q=v_q,
        path=path,
        banned=banned,
        l_p=l_p,
        l_q=l_q,
        X=tuple(X),
        Y=tuple(Y),
        forced_x=_forced(g, banned, X),
        forced_y=_forced(g, banned, Y),
        positions_x={w: position_set(g, w, {v_p: l_p}, banned) for w in X},
        positions_y={w: position_set(g, w, {v_q: l_q}, banned) for w in Y},
        l_p_prime=transitive_number(v_p, g, banned | {path[1]}),
        l_q_prime=transitive_number(v_q, g, banned | {path[-2]}),
        l_p_star=constrained_max(g, v_p, v_q, l_q, banned),
        l_q_star=constrained_max(g, v_q, v_p, l_p, banned),
    )


def agrees(w: int, pa: PathAnalysis) -> bool:
    """Can w take one block both when v_p reaches l_p and when v_q reaches l_q?"""
    if w not in pa.positions_x or w not in pa.positions_y:
        raise ValueError(f"{w} is not in both X and Y")
    return bool(pa.positions_x[w] & pa.positions_y[w])


def endpoint_pairs(pa: PathAnalysis) -> list[tuple[int, int]]:
    """Candidate (value of v_p, value of v_q) contributions."""
    common = set(pa.X) & set(pa.Y)
    if not common:
        pa.case = "disjoint"
        return [(pa.l_p, pa.l_q)]
    if all(agrees(w, pa) for w in common):
        pa.case = "agree"
        return [(pa.l_p, pa.l_q)]
    q_in_x = pa.v_q in pa.X
    p_in_y = pa.v_p in pa.Y
    lp, lq = pa.l_p, pa.l_q
    if not q_in_x and not p_in_y:
        pa.case = "conflict-i"
        return [(lp, pa.l_q_prime), (pa.l_p_prime, lq)]
    if not q_in_x:
        pa.case = "conflict-ii"
        return [(lp, pa.l_q_prime), (pa.l_p_star, lq)]
    if not p_in_y:
        pa.case = "conflict-iii"
        return [(lp, pa.l_q_star), (pa.l_p_prime, lq)]
    pa.case = "conflict-iv"
    return [(lp, pa.l_q_star), (pa.l_p_prime, pa.l_q_prime), (pa.l_p_star, lq)]


def _contained(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return len(a) == len(b) and all(x <= y for x, y in zip(a, b))


def maximal_sequences(seqs: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    uniq = sorted(set(seqs))
    return [s for s in uniq if not any(t != s and _contained(s, t) for t in uniq)]


def _tree_path(g: Graph, banned: frozenset[int], a: int, b: int) -> tuple[int, ...]:
    prev = {a: None}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        for w in sorted(g.neighbors(v)):
            if w not in prev and w not in banned:
                prev[w] = v
                queue.append(w)
    out = [b]
    while out[-1] != a:
        out.append(prev[out[-1]])
    return tuple(reversed(out))


@dataclass
class VertexAnalysis:
    """Bottom-up record for one vertex under one ordering."""

    vertex: int
    children: list[int]
    sequences: list[tuple[int, ...]]
    value: int
    path: PathAnalysis | None = None
    others: dict[int, int] = field(default_factory=dict)  # children outside the path pair


def _linked_pair(g: Graph, sub: set[int], x: int, kids: list[int]) -> tuple[int, int] | None:
    comp: dict[int, int] = {}
    for k in kids:
        if k in comp:
            return (min(comp[k], k), max(comp[k], k))
        for v in _bfs(g, [k], allowed=sub - {x}):
            comp[v] = k
    return None


def maximal_l_sequences(g: Graph, sigma: SigmaOrdering, x: int, tr: dict[int, int]) -> VertexAnalysis:
    kids = sigma.children(g, x)
    if not kids:
        raise ValueError(f"{x} is a leaf of its rooted subgraph")
    sub = sigma.rooted_subgraph(g, x)
    pair = _linked_pair(g, sub, x, kids)
    if pair is None:
        seq = tuple(sorted(tr[c] for c in kids))
        return VertexAnalysis(x, kids, [seq], 1 + z_value(seq))
    v_p, v_q = pair
    tree = set(_bfs(g, [v_p], allowed=sub - {x}))
    banned = frozenset(v for v in range(g.n) if v not in tree)
    pa = compute_XY(g, banned, _tree_path(g, banned, v_p, v_q))
    pa.pairs = endpoint_pairs(pa)
    others = {c: tr[c] for c in kids if c not in pair}
    rest = list(others.values())
    seqs = maximal_sequences([tuple(sorted(rest + [a, b])) for a, b in pa.pairs])
    value = 1 + max(z_value(s) for s in seqs)
    return VertexAnalysis(x, kids, seqs, value, pa, others)


@dataclass
class RootRun:
    sigma: SigmaOrdering
    tr: dict[int, int]
    analyses: dict[int, VertexAnalysis]

    @property
    def value(self) -> int:
        return self.tr[self.sigma.root]


def rooted_run(g: Graph, u: int) -> RootRun:
    sigma = sigma_ordering(g, u)
    tr: dict[int, int] = {}
    analyses: dict[int, VertexAnalysis] = {}
    for c in sigma.order:
        if not sigma.children(g, c):
            tr[c] = 1
            continue
        va = maximal_l_sequences(g, sigma, c, tr)
        analyses[c] = va
        tr[c] = va.value
    return RootRun(sigma, tr, analyses)


def rooted_transitive_number_uc(g: Graph, sigma_root: int, x: int) -> int:
    return rooted_run(g, sigma_root).tr[x]


def transitive_numbers_uc(g: Graph) -> dict[int, int]:
    return {u: rooted_run(g, u).value for u in range(g.n)}


def transitivity_unicyclic(g: Graph) -> SolveResult:
    """Tr(G), which equals D(G) for unicyclic graphs, with a transitive witness."""
    if not is_unicyclic(g):
        raise GraphClassError("graph is not unicyclic")
    runs = [rooted_run(g, u) for u in range(g.n)]
    best = max(runs, key=lambda r: (r.value, -r.sigma.root))
    labels = _witness(g, best)
    pi = labels_to_partition(labels, g.n)
    if pi.k != best.value or not is_transitive(g, pi):
        raise AssertionError(f"witness reconstruction failed for {g!r}")
    return SolveResult(best.value, pi, "unicyclic")


def _witness(g: Graph, run: RootRun) -> dict[int, int]:
    """Top-down labelling: each vertex hands blocks 1..b-1 to its children."""
    sigma, tr = run.sigma, run.tr
    labels = {sigma.root: run.value}
    settled: set[int] = set()
    for x in reversed(sigma.order):
        if x in settled:
            continue
        b = labels[x]
        va = run.analyses.get(x)
        if va is None:
            continue
        if va.path is None:
            caps = {c: tr[c] for c in va.children}
        else:
            pa = va.path
            a, c = _pick_pair(g, pa, va.others, b)
            fixed = pinned_labeling(g, pa.v_p, {pa.v_p: a, pa.v_q: c}, pa.banned)
            labels.update(fixed)
            settled.update(fixed)
            caps = dict(va.others)
            required = [r for r in range(1, b) if r not in (a, c)]
            _hand_out(labels, caps, required)
            continue
        _hand_out(labels, caps, list(range(1, b)))
    return labels


def _hand_out(labels: dict[int, int], caps: dict[int, int], required: list[int]) -> None:
    kids = sorted(caps, key=lambda c: (caps[c], c))
    used = set()
    for need in required:
        c = next((c for c in kids if c not in used and caps[c] >= need), None)
        if c is None:
            raise AssertionError(f"no child can take block {need}")
        used.add(c)
        labels[c] = need
    for c in kids:
        labels.setdefault(c, 1)


def _pick_pair(g: Graph, pa: PathAnalysis, others: dict[int, int], b: int) -> tuple[int, int]:
    """Positions for the two cycle neighbours that, with the other children, cover 1..b-1."""
    caps = list(others.values())
    for a in sorted(position_set(g, pa.v_p, None, pa.banned), reverse=True):
        for c in sorted(position_set(g, pa.v_q, {pa.v_p: a}, pa.banned), reverse=True):
            required = [r for r in range(1, b) if r not in (a, c)]
            if _coverable(required, caps):
                return a, c
    raise AssertionError(f"entry vertex cannot reach block {b}")
