"""Sink blocks in D-partitions.

A sink is a block dominated by every other block.  Small orders always admit
a sink-bearing D-partition; this module builds such partitions explicitly
where a construction is known, falls back to search where it is not, and
hunts for graphs where no D-partition has a sink.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Iterator

from .graph import Graph, is_2k2_free
from .oracle import exists_sink_D_partition, iter_partitions, upper_domatic_bf
from .partition import (
    VertexPartition,
    domination_digraph,
    is_transitive,
    is_upper_domatic,
    sinks,
)


class PreconditionError(ValueError):
    """The partition or graph does not meet the construction's hypotheses."""


class ConstructionError(AssertionError):
    """A constructed partition failed verification."""


class ConjectureAlarm(AssertionError):
    """A search came back empty where a sink (or in-degree) result says it cannot."""


def _nbhd(g: Graph, vertices: Iterable[int]) -> set[int]:
    out: set[int] = set()
    for v in vertices:
        out |= g.neighbors(v)
    return out


def _require_D_partition(g: Graph, pi: VertexPartition, D: int | None) -> int:
    pi.validate(g.n)
    if not is_upper_domatic(g, pi):
        raise PreconditionError("partition is not upper domatic")
    if D is None:
        D = upper_domatic_bf(g).value
    if pi.k != D:
        raise PreconditionError(f"partition has order {pi.k}, D(G) = {D}")
    return D


def has_sink_block(g: Graph, pi: VertexPartition, block: int | None = None) -> bool:
    found = sinks(domination_digraph(g, pi))
    return bool(found) if block is None else block in found


# -- explicit constructions --------------------------------------------------


def sink_from_km3(g: Graph, pi: VertexPartition, j: int, D: int | None = None) -> VertexPartition:
    """Split block j into its part seen by both blocks it alone dominates, and the rest.

    Block j must be dominated by exactly k-3 blocks.  The part X adjacent to
    both undominating blocks becomes a sink; the rest of block j joins
    whichever of those two blocks dominates the other.
    """
    _require_D_partition(g, pi, D)
    dd = domination_digraph(g, pi)
    k = pi.k
    if dd.in_degrees()[j] != k - 3:
        raise PreconditionError(f"block {j + 1} has in-degree {dd.in_degrees()[j]}, need {k - 3}")
    j1, j2 = [i for i in range(k) if i != j and not dd(i, j)]
    block = pi[j]
    X = block & _nbhd(g, pi[j1]) & _nbhd(g, pi[j2])
    if not X:
        raise PreconditionError(f"no vertex of block {j + 1} sees both blocks {j1 + 1} and {j2 + 1}")
    rest = block - X
    target = j1 if dd(j1, j2) else j2
    blocks = list(pi.blocks)
    blocks[j] = X
    blocks[target] = blocks[target] | rest
    out = VertexPartition(blocks)
    if out.k != k or not is_upper_domatic(g, out) or not has_sink_block(g, out, j):
        raise ConstructionError(f"split of block {j + 1} failed on {g!r}")
    return out


def km2_sink(g: Graph, pi: VertexPartition, j: int, D: int | None = None) -> VertexPartition:
    """Some sink-bearing D-partition, given a block of in-degree k-2 (found by search)."""
    D = _require_D_partition(g, pi, D)
    indeg = domination_digraph(g, pi).in_degrees()[j]
    if indeg != pi.k - 2:
        raise PreconditionError(f"block {j + 1} has in-degree {indeg}, need {pi.k - 2}")
    found = exists_sink_D_partition(g, D)
    if found is None:
        raise ConjectureAlarm(f"no sink-bearing D-partition although block {j + 1} has in-degree k-2: {g!r}")
    return found


# -- order five, every block dominated by exactly two others ----------------

# The regular tournament on five blocks, 0-based: i -> (i+3, i+4) rotated so
# that block 1 dominates blocks 4 and 5 and is dominated by blocks 2 and 3.
PATTERN = frozenset({(0, 3), (0, 4), (1, 0), (1, 2), (2, 0), (2, 3), (3, 1), (3, 4), (4, 1), (4, 2)})


@dataclass
class Case5Certificate:
    pi: VertexPartition  # relabelled to the pattern, block 1 of minimum size
    parts: dict[int, tuple[frozenset[int], frozenset[int], frozenset[int]]]
    y: dict[str, int]
    subcase: str
    construction: str = ""
    psi: VertexPartition | None = None


@dataclass
class CaseResult:
    status: str  # "sink" or "unresolved"
    partition: VertexPartition | None = None
    certificate: Case5Certificate | None = None
    attempts: list[Case5Certificate] = field(default_factory=list)


def planted_case5_instance(seed: int, sizes: list[int] | None = None, extra: int | None = None):
    """A graph with a five-block partition following PATTERN, or None.

    Each block is split into two sides; every vertex of the block's first
    dominated block gets a neighbour on the first side, likewise for the
    second, and ``extra`` random edges are added.  The result is returned only
    when the planted partition really has all in-degrees two; D(G) = 5 is not
    checked.
    """
    rng = random.Random(seed)
    if sizes is None:
        sizes = [2] * 5
        sizes[rng.randrange(5)] += rng.randint(0, 1)
    if extra is None:
        extra = rng.randint(0, 6)
    blocks, v = [], 0
    for size in sizes:
        if size < 2:
            raise ValueError("every block needs at least two vertices")
        blocks.append(list(range(v, v + size)))
        v += size
    edges: set[tuple[int, int]] = set()
    for j, block in enumerate(blocks):
        members = block[:]
        rng.shuffle(members)
        cut = rng.randint(1, len(members) - 1)
        for side, target in zip((members[:cut], members[cut:]), _outs(j)):
            for w in blocks[target]:
                u = rng.choice(side)
                edges.add((min(u, w), max(u, w)))
    for _ in range(extra):
        a, b = rng.sample(range(v), 2)
        edges.add((min(a, b), max(a, b)))
    g = Graph(v, edges)
    pi = VertexPartition(blocks)
    if domination_digraph(g, pi).in_degrees() != [2] * 5:
        return None
    return g, pi


def _to_pattern(g: Graph, pi: VertexPartition) -> VertexPartition | None:
    dd = domination_digraph(g, pi)
    small = min(range(5), key=lambda i: (len(pi[i]), i))
    for perm in permutations(range(5)):
        if perm[0] != small:
            continue
        if all(dd(perm[a], perm[b]) == ((a, b) in PATTERN) for a in range(5) for b in range(5) if a != b):
            return pi.reordered(perm)
    return None


def _outs(i: int) -> list[int]:
    return sorted(b for a, b in PATTERN if a == i)


def _parts(g: Graph, pi: VertexPartition) -> dict[int, tuple[frozenset[int], frozenset[int], frozenset[int]]]:
    out = {}
    for j in range(5):
        a, b = _outs(j)
        ja = pi[j] & _nbhd(g, pi[a])
        jb = pi[j] & _nbhd(g, pi[b])
        out[j] = (frozenset(ja), frozenset(jb), frozenset(pi[j] - ja - jb))
    return out


def _first(candidates: Iterable[int]) -> int | None:
    return min(candidates, default=None)


def _partition(g: Graph, named: list[set[int]]) -> VertexPartition:
    """Blocks W_1..W_5 given W_2..W_5; W_1 takes everything else."""
    used = set().union(*named)
    return VertexPartition([set(range(g.n)) - used] + named)


def _pick_y(g: Graph, pi: VertexPartition, y1: int, y1p: int) -> dict[str, int]:
    V = pi.blocks
    n = g.neighbors
    y = {"y1": y1, "y1'": y1p}
    y["y4"], y["y4'"] = sorted(n(y1) & V[3])[:2]
    y["y5"], y["y5'"] = sorted(n(y1p) & V[4])[:2]
    for name, blk in (("y2", V[1]), ("y3", V[2])):
        common = n(y1) & n(y1p) & blk
        if common:
            y[name] = y[name + "'"] = min(common)
        else:
            y[name] = min(n(y1) & blk)
            y[name + "'"] = min(n(y1p) & blk)
    return y


def _build(g: Graph, pi: VertexPartition, parts, y: dict[str, int]) -> tuple[str, str, list[set[int]] | None]:
    """Subcase name, construction name and blocks W_2..W_5 (None when unresolved)."""
    V = pi.blocks
    n = g.neighbors
    same2 = y["y2"] == y["y2'"]
    same3 = y["y3"] == y["y3'"]
    v23 = parts[1][1]  # part of block 2 adjacent to block 3

    def extra(y4pp: int) -> set[int]:
        return set() if y4pp in (y["y4"], y["y4'"]) else {y["y4"]}

    if same2 and same3:
        y2pp = _first(n(y["y3"]) & v23)
        y4pp = _first(n(y2pp) & V[3])
        y.update({"y2''": y2pp, "y4''": y4pp})
        w2 = {y["y1'"], y4pp} | extra(y4pp)
        return "5.1", "psi", [w2, {y["y2"], y2pp}, {y["y3"]}, {y["y1"]}]
    if same2 and not same3:
        return ("5.2",) + _psi_prime(g, pi, parts, y)
    if not same2 and same3:
        y4pp = _first(n(y["y2"]) & V[3])
        y2pp = _first(n(y["y3"]) & v23)
        y.update({"y2''": y2pp, "y4''": y4pp})
        w2 = {y["y2'"], y2pp, y4pp} | extra(y4pp)
        return "5.3", "psi''", [w2, {y["y2"], y["y1'"]}, {y["y3"]}, {y["y1"]}]
    if not is_2k2_free(g):
        return "5.4", "", None
    if g.has_edge(y["y1"], y["y1'"]):
        w3 = {y["y3"], y["y3'"]}
        return "5.4", "psi_1", [set(V[1]), w3, {y["y1'"]}, {y["y1"]}]
    if g.has_edge(y["y1"], y["y2'"]) or g.has_edge(y["y1'"], y["y2"]):
        common = y["y2'"] if g.has_edge(y["y1"], y["y2'"]) else y["y2"]
        y["y2"] = y["y2'"] = common
        sub, name, blocks = _psi_prime(g, pi, parts, y)
        return "5.4", name + " (cross edge)", blocks
    if g.has_edge(y["y2"], y["y2'"]):
        y2pp = _first(n(y["y3"]) & v23)
        y4pp = _first(n(y["y2"]) & V[3])
        y.update({"y2''": y2pp, "y4''": y4pp})
        w2 = {y["y1'"], y2pp, y4pp} | extra(y4pp)
        return "5.4", "psi_4", [w2, {y["y3"], y["y2'"]}, {y["y2"]}, {y["y1"]}]
    raise ConstructionError("2K2-free graph without any of the four connecting edges")


def _psi_prime(g: Graph, pi: VertexPartition, parts, y: dict[str, int]) -> tuple[str, list[set[int]]]:
    """y2 sees both y1 and y1'; y3 and y3' differ.  y3' joins W_2 to cover y1'."""
    V = pi.blocks
    n = g.neighbors
    y4pp = _first(n(y["y2"]) & V[3])
    y2pp = _first(n(y["y3"]) & parts[1][1])
    y.update({"y2''": y2pp, "y4''": y4pp})
    w2 = {y["y3'"], y2pp, y4pp} | (set() if y4pp in (y["y4"], y["y4'"]) else {y["y4"]})
    return "psi'", [w2, {y["y1'"], y["y3"]}, {y["y2"]}, {y["y1"]}]


def d5_case_analysis(g: Graph, pi: VertexPartition, D: int | None = None) -> CaseResult:
    """Build a transitive D-partition from a five-block partition with all in-degrees two.

    Tries each admissible choice of y1 and y1' in increasing order and returns
    the first verified construction, or ``unresolved`` when every choice lands
    in the open subcase (both y2 != y2' and y3 != y3' on a graph with an
    induced 2K2).
    """
    _require_D_partition(g, pi, D)
    if pi.k != 5:
        raise PreconditionError("partition must have five blocks")
    dd = domination_digraph(g, pi)
    if dd.in_degrees() != [2] * 5:
        raise PreconditionError(f"in-degrees {dd.in_degrees()} are not all two")
    for j in range(5):
        j1, j2 = [i for i in range(5) if i != j and not dd(i, j)]
        if pi[j] & _nbhd(g, pi[j1]) & _nbhd(g, pi[j2]):
            raise PreconditionError(f"block {j + 1} has a vertex seeing both blocks it dominates")
    norm = _to_pattern(g, pi)
    if norm is None:
        raise ConstructionError("five-block digraph is not the regular tournament")
    parts = _parts(g, norm)
    V = norm.blocks
    y1s = [v for v in sorted(parts[0][0]) if len(g.neighbors(v) & V[3]) >= 2]
    y1ps = [v for v in sorted(parts[0][1]) if len(g.neighbors(v) & V[4]) >= 2]
    if not y1s or not y1ps:
        raise ConstructionError("no vertex of the smallest block sees two vertices of a dominated block")
    result = CaseResult("unresolved")
    for y1 in y1s:
        for y1p in y1ps:
            y = _pick_y(g, norm, y1, y1p)
            subcase, name, blocks = _build(g, norm, parts, y)
            cert = Case5Certificate(norm, parts, dict(y), subcase, name)
            result.attempts.append(cert)
            if blocks is None:
                continue
            psi = _partition(g, blocks)
            cert.psi = psi
            if psi.k != 5 or not is_transitive(g, psi):
                raise ConstructionError(f"{name} in subcase {subcase} is not transitive: {psi.as_lists()} on {g!r}")
            return CaseResult("sink", psi, cert, result.attempts)
    return result


# -- order six --------------------------------------------------------------


def d6_indegree3_check(g: Graph, D: int | None = None) -> VertexPartition:
    """A D-partition with a block dominated by at least three others (D(G) must be 6)."""
    if D is None:
        D = upper_domatic_bf(g).value
    if D != 6:
        raise PreconditionError(f"D(G) = {D}, need 6")
    for pi in iter_partitions(g, 6, "upper"):
        if max(domination_digraph(g, pi).in_degrees()) >= 3:
            return pi
    raise ConjectureAlarm(f"no D-partition with an in-degree-3 block: {g!r}")


def d6_indegree_stats(g: Graph) -> tuple[int, int]:
    """(D-partitions with a block of in-degree >= 3, all D-partitions) when D(G) = 6."""
    parts = list(iter_partitions(g, 6, "upper"))
    good = sum(max(domination_digraph(g, pi).in_degrees()) >= 3 for pi in parts)
    return good, len(parts)


# -- routing a D-partition to a sink ------------------------------------------


@dataclass
class SinkRoute:
    route: str  # "direct", "km2", "km1", "km3", "case-analysis", "unresolved", "search"
    partition: VertexPartition | None


def sink_by_cases(g: Graph, D: int | None = None) -> SinkRoute:
    """Walk the D-partitions and return the first one the case analysis settles.

    Falls back to plain search when no partition is settled constructively.
    """
    if D is None:
        D = upper_domatic_bf(g).value
    saw_unresolved = False
    for pi in iter_partitions(g, D, "upper"):
        dd = domination_digraph(g, pi)
        indeg = dd.in_degrees()
        k = pi.k
        if k - 1 in indeg or k == 1:
            return SinkRoute("direct", pi)
        if k - 2 in indeg:
            return SinkRoute("km2", km2_sink(g, pi, indeg.index(k - 2), D))
        if k == 5 and 1 in indeg:
            # a block dominated once forces another block of in-degree three
            return SinkRoute("km1", exists_sink_D_partition(g, D))
        if k >= 4:
            for j in range(k):
                if indeg[j] == k - 3:
                    j1, j2 = [i for i in range(k) if i != j and not dd(i, j)]
                    if pi[j] & _nbhd(g, pi[j1]) & _nbhd(g, pi[j2]):
                        return SinkRoute("km3", sink_from_km3(g, pi, j, D))
        if k == 5 and indeg == [2] * 5:
            res = d5_case_analysis(g, pi, D)
            if res.status == "sink":
                return SinkRoute("case-analysis", res.partition)
            saw_unresolved = True
    found = exists_sink_D_partition(g, D)
    return SinkRoute("unresolved" if saw_unresolved and found is None else "search", found)


# -- hunting ------------------------------------------------------------------


@dataclass
class HuntRecord:
    graph6: str
    n: int
    m: int
    D: int | None
    sink_exists: bool | None
    witness: list[list[int]] | None
    elapsed: float
    status: str = "ok"  # ok | COUNTEREXAMPLE | CONTRADICTION | skipped
    evidence: list[dict] | None = None

    def as_dict(self) -> dict:
        out = {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "D": self.D,
            "sink_exists": self.sink_exists,
            "witness": self.witness,
            "elapsed": round(self.elapsed, 6),
            "status": self.status,
        }
        if self.evidence is not None:
            out["evidence"] = self.evidence
        return out


def hunt_one(g: Graph, max_n: int = 11) -> HuntRecord:
    start = time.perf_counter()
    if g.n > max_n:
        return HuntRecord(g.graph6(), g.n, g.m, None, None, None, 0.0, "skipped")
    if g.n == 0:
        return HuntRecord(g.graph6(), 0, 0, 0, True, [], 0.0)
    D = upper_domatic_bf(g).value
    found = exists_sink_D_partition(g, D)
    rec = HuntRecord(
        g.graph6(),
        g.n,
        g.m,
        D,
        found is not None,
        found.as_lists() if found is not None else None,
        time.perf_counter() - start,
    )
    if found is None:
        rec.status = "COUNTEREXAMPLE" if D >= 5 else "CONTRADICTION"
        rec.evidence = [
            {"blocks": pi.as_lists(), "digraph": domination_digraph(g, pi).to_json()}
            for pi in iter_partitions(g, D, "upper")
        ]
    return rec


def conjecture_hunt(graphs: Iterable[Graph], max_n: int = 11) -> Iterator[HuntRecord]:
    for g in graphs:
        yield hunt_one(g, max_n)
