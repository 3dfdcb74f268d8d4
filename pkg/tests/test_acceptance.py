"""Acceptance criteria, one test each.  Every test prints a PASS/FAIL line
(also collected into the terminal summary) before asserting."""

import random
import time

import pytest

from updomatic import generators as gen
from updomatic.cobip import cobipartition, source_set_transform
from updomatic.graph import is_2k2_free
from updomatic.oracle import (
    constrained_position_max,
    domatic_bf,
    exists_sink_D_partition,
    grundy_bf,
    iter_partitions,
    iter_transitive_labelings,
    transitivity_bf,
    upper_domatic_bf,
)
from updomatic.partition import domination_digraph, is_transitive, is_upper_domatic, sinks, sources
from updomatic.sinkset import (
    ConstructionError,
    PreconditionError,
    _nbhd,
    d5_case_analysis,
    d6_indegree3_check,
    d6_indegree_stats,
    planted_case5_instance,
    sink_by_cases,
    sink_from_km3,
)
from updomatic.split import upper_domatic_split
from updomatic.tree import (
    allowed_positions,
    constrained_max,
    rooted_transitive_numbers,
    transitive_number,
    transitivity_tree,
)
from updomatic.unicyclic import rooted_run, transitivity_unicyclic

from .conftest import ACCEPTANCE_LINES

pytestmark = pytest.mark.acceptance


def report(number, name, ok, detail):
    line = f"criterion {number:>2} [{'PASS' if ok else 'FAIL'}] {name}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def all_graphs_upto(n):
    for k in range(1, n + 1):
        yield from gen.nonisomorphic_graphs(k)


def test_01_unicyclic_equivalence():
    start = time.perf_counter()
    bad, count = [], 0
    for n in range(3, 9):
        for g in gen.unicyclic_graphs(n):
            count += 1
            uc = transitivity_unicyclic(g).value
            if not uc == transitivity_bf(g).value == upper_domatic_bf(g).value:
                bad.append(g.graph6())
    rng = random.Random(20240901)
    for _ in range(1000):
        g = gen.random_unicyclic(rng.randint(9, 11), rng.randrange(1 << 30))
        count += 1
        uc = transitivity_unicyclic(g).value
        if not uc == transitivity_bf(g).value == upper_domatic_bf(g).value:
            bad.append(g.graph6())
    elapsed = time.perf_counter() - start
    report(1, "unicyclic = Tr = D", not bad and elapsed < 600, f"{count} graphs, {len(bad)} mismatches, {elapsed:.0f}s")


def test_02_tree_equivalence():
    start = time.perf_counter()
    bad, count = [], 0
    rng = random.Random(7)
    for n in range(2, 10):
        for _ in range(500):
            g = gen.random_tree(n, rng.randrange(1 << 30))
            count += 1
            best = max(transitive_number(x, g) for x in range(g.n))
            res = transitivity_tree(g)
            if not best == res.value == transitivity_bf(g).value or not is_transitive(g, res.witness):
                bad.append(g.graph6())
    elapsed = time.perf_counter() - start
    report(2, "tree max transitive number = Tr", not bad and elapsed < 120, f"{count} trees, {len(bad)} mismatches, {elapsed:.0f}s")


def test_03_split_equivalence():
    start = time.perf_counter()
    bad, count = [], 0
    graphs = [g for n in range(1, 8) for g in gen.split_graphs(n)]
    rng = random.Random(11)
    graphs += [gen.random_split(rng.randint(1, 10), rng.randrange(1 << 30)) for _ in range(500)]
    for g in graphs:
        count += 1
        res = upper_domatic_split(g)
        ok = res.value == upper_domatic_bf(g).value == transitivity_bf(g).value
        if not ok or res.witness.k != res.value or not is_transitive(g, res.witness):
            bad.append(g.graph6())
    elapsed = time.perf_counter() - start
    report(3, "split formula = D = Tr", not bad and elapsed < 300, f"{count} graphs, {len(bad)} mismatches, {elapsed:.0f}s")


def test_04_cobipartite_identity():
    start = time.perf_counter()
    bad, count = [], 0
    for n in range(1, 9):
        for g in gen.cobipartite_graphs(n):
            count += 1
            if transitivity_bf(g).value != upper_domatic_bf(g).value:
                bad.append(g.graph6())
    elapsed = time.perf_counter() - start
    report(4, "co-bipartite Tr = D", not bad and elapsed < 900, f"{count} graphs, {len(bad)} mismatches, {elapsed:.0f}s")


def test_05_source_set_transform():
    bad, count, swapped = [], 0, 0
    for n in range(1, 8):
        for g in gen.cobipartite_graphs(n):
            sides = cobipartition(g)
            for k in range(1, upper_domatic_bf(g).value + 1):
                for pi in iter_partitions(g, k, "upper"):
                    count += 1
                    try:
                        out = source_set_transform(g, pi, sides)
                    except AssertionError:
                        bad.append((g.graph6(), pi.as_lists()))
                        continue
                    swapped += out != pi
                    if out.k != k or not is_upper_domatic(g, out) or not sources(domination_digraph(g, out)):
                        bad.append((g.graph6(), pi.as_lists()))
    report(5, "source-set transform", not bad, f"{count} partitions ({swapped} swapped), {len(bad)} failures")


def test_06_inequality_chain():
    bad, count = [], 0
    for g in all_graphs_upto(7):
        count += 1
        gr, tr, D, d = grundy_bf(g).value, transitivity_bf(g).value, upper_domatic_bf(g).value, domatic_bf(g).value
        if not (gr <= tr <= D <= min(g.n, g.max_degree + 1) and d <= tr):
            bad.append(g.graph6())
    report(6, "Grundy <= Tr <= D <= min(n, maxdeg+1), d <= Tr", not bad, f"{count} graphs, {len(bad)} violations")


def test_07_sink_when_D_at_most_4():
    bad, count = [], 0
    for g in all_graphs_upto(7):
        D = upper_domatic_bf(g).value
        if D <= 4:
            count += 1
            if exists_sink_D_partition(g, D) is None:
                bad.append(g.graph6())
    report(7, "sink-bearing D-partition when D <= 4", not bad, f"{count} graphs, {len(bad)} violations")


def test_08_km3_construction():
    bad, count = [], 0
    for g in all_graphs_upto(7):
        D = upper_domatic_bf(g).value
        if D < 4:
            continue
        for pi in iter_partitions(g, D, "upper"):
            dd = domination_digraph(g, pi)
            indeg = dd.in_degrees()
            for j in range(D):
                if indeg[j] != D - 3:
                    continue
                j1, j2 = [i for i in range(D) if i != j and not dd(i, j)]
                if not pi[j] & _nbhd(g, pi[j1]) & _nbhd(g, pi[j2]):
                    continue
                count += 1
                try:
                    out = sink_from_km3(g, pi, j, D)
                except ConstructionError:
                    bad.append((g.graph6(), pi.as_lists(), j))
                    continue
                if out.k != D or not is_upper_domatic(g, out) or j not in sinks(domination_digraph(g, out)):
                    bad.append((g.graph6(), pi.as_lists(), j))
    report(8, "split of an in-degree k-3 block gives a sink", not bad and count > 0, f"{count} instances, {len(bad)} failures")


def test_09_two_k2_free_d5():
    rng = random.Random(5)
    scanned = free = d5 = 0
    bad, routes = [], {}
    while scanned < 10_000:
        n = rng.randint(6, 10)
        g = gen.gnp(n, rng.uniform(0.3, 0.95), rng.randrange(1 << 30))
        scanned += 1
        if not is_2k2_free(g):
            continue
        free += 1
        if g.max_degree < 4 or upper_domatic_bf(g).value != 5:
            continue
        d5 += 1
        route = sink_by_cases(g, 5)
        routes[route.route] = routes.get(route.route, 0) + 1
        if route.partition is None or not sinks(domination_digraph(g, route.partition)):
            bad.append(g.graph6())
    # planted five-block instances reach the case analysis directly; they are
    # never 2K2-free, so unresolved outcomes are reported, not failed
    planted: dict[str, int] = {}
    for seed in range(300):
        inst = planted_case5_instance(seed)
        if inst is None or inst[0].n > 11 or upper_domatic_bf(inst[0]).value != 5:
            continue
        g, pi = inst
        try:
            res = d5_case_analysis(g, pi, 5)
        except PreconditionError:
            continue
        key = res.status if res.certificate is None else f"{res.status} {res.certificate.subcase}"
        planted[key] = planted.get(key, 0) + 1
        if res.status == "sink" and not is_transitive(g, res.partition):
            bad.append(g.graph6())
    detail = f"{scanned} scanned, {free} 2K2-free, {d5} with D=5, routes {routes}, planted {planted}, {len(bad)} violations"
    report(9, "2K2-free D=5 has a sink", not bad and d5 > 0, detail)


def test_10_d6_indegree():
    rng = random.Random(6)
    graphs = [g for g in all_graphs_upto(7) if g.max_degree >= 5]
    for _ in range(1500):
        n = rng.randint(7, 9)
        graphs.append(gen.gnp(n, rng.uniform(0.5, 0.9), rng.randrange(1 << 30)))
    bad, found, every, small = [], 0, 0, 0
    for g in graphs:
        if upper_domatic_bf(g).value != 6:
            continue
        found += 1
        try:
            d6_indegree3_check(g, 6)
        except AssertionError:
            bad.append(g.graph6())
        if g.n <= 8:
            good, total = d6_indegree_stats(g)
            every += good == total
            small += 1
    report(10, "D=6 has a block of in-degree >= 3", not bad and found > 0, f"{found} D=6 graphs, {len(bad)} violations; every D-partition qualifies in {every} of {small} with n<=8")


def _tree_checks(g):
    bad = 0
    for x in range(g.n):
        dp = rooted_transitive_numbers(g, x)
        top = dp.tr[x]
        labelings = [lab for lab in iter_transitive_labelings(g, {x: top})]
        for c in dp.children[x]:
            if allowed_positions(g, x, c) != {lab[c] for lab in labelings}:
                bad += 1
        for y in range(g.n):
            if y == x:
                continue
            for pos in range(1, g.degree(y) + 2):
                bad += constrained_max(g, x, y, pos) != constrained_position_max(g, x, y, pos)
    return bad


def test_11_internal_oracles():
    bad = checked = 0
    for n in range(1, 8):
        for g in gen.nonisomorphic_trees(n):
            checked += 1
            bad += _tree_checks(g)
    for n in range(3, 8):
        for g in gen.unicyclic_graphs(n):
            for u in range(g.n):
                for va in rooted_run(g, u).analyses.values():
                    pa = va.path
                    if pa is None:
                        continue
                    checked += 1
                    keep = [v for v in range(g.n) if v not in pa.banned]
                    h, old = g.induced(keep)
                    new = {v: i for i, v in enumerate(old)}
                    p, q = new[pa.v_p], new[pa.v_q]
                    bad += pa.l_p_star != constrained_position_max(h, p, q, pa.l_q)
                    bad += pa.l_q_star != constrained_position_max(h, q, p, pa.l_p)
                    for w, pos in pa.positions_x.items():
                        bad += pos != {lab[new[w]] for lab in iter_transitive_labelings(h, {p: pa.l_p})}
                    for w, pos in pa.positions_y.items():
                        bad += pos != {lab[new[w]] for lab in iter_transitive_labelings(h, {q: pa.l_q})}
    report(11, "l* and allowed positions match the oracle", bad == 0, f"{checked} trees and path analyses, {bad} disagreements")
