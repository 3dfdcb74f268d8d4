"""Command-line entry point: ``updomatic solve|check|gen|hunt|selftest``."""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time
from dataclasses import dataclass
from multiprocessing import Pool
from pathlib import Path
from typing import Callable, Iterator, Sequence

from . import cobip, generators, oracle, split, tree, unicyclic
from .graph import Graph, GraphClassError, ParseError, classify, parse_dimacs, parse_edge_list
from .partition import PartitionError, classify_partition, parse_partition, report
from .sinkset import hunt_one

log = logging.getLogger("updomatic")

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_MISMATCH, EXIT_CAP = 0, 1, 2, 3, 4
ORACLE_CAP = 11
METHODS = ("auto", "oracle", "tree", "unicyclic", "split", "cobip")
KINDS = ("upper-domatic", "transitive", "domatic", "grundy")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


# -- input -------------------------------------------------------------------


def read_graph(path: str | None, fmt: str = "edgelist", stdin: bool = False) -> Graph:
    if stdin or path in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise CliError(f"cannot read {path}: {exc}", EXIT_PARSE) from exc
    try:
        return parse_dimacs(text) if fmt == "dimacs" else parse_edge_list(text)
    except ParseError as exc:
        raise CliError(f"parse error: {exc}", EXIT_PARSE) from exc


# -- solve -------------------------------------------------------------------


def _guard(g: Graph, force: bool) -> None:
    if g.n > ORACLE_CAP and not force:
        raise CliError(f"n = {g.n} exceeds the exhaustive-search cap of {ORACLE_CAP}; pass --force", EXIT_CAP)


def pick_method(tags: set[str]) -> str:
    for method, tag in (("split", "Split"), ("tree", "Tree"), ("unicyclic", "Unicyclic"), ("cobip", "CoBipartite")):
        if tag in tags:
            return method
    return "oracle"


def solve_graph(g: Graph, method: str = "auto", force: bool = False) -> dict:
    if g.n == 0:
        raise CliError("graph has no vertices", EXIT_PARSE)
    cls = classify(g)
    chosen = pick_method(cls.tags) if method == "auto" else method
    need = {"tree": "Tree", "unicyclic": "Unicyclic", "split": "Split", "cobip": "CoBipartite"}.get(chosen)
    if need and need not in cls.tags:
        raise CliError(f"method {chosen} needs a {need} graph; tags are {sorted(cls.tags)}", EXIT_MISMATCH)
    out: dict = {"n": g.n, "m": g.m, "tags": sorted(cls.tags), "method": chosen}
    if chosen == "oracle":
        _guard(g, force)
        res = oracle.upper_domatic_bf(g)
        out["Tr"] = oracle.transitivity_bf(g).value
    elif chosen == "cobip":
        _guard(g, force)
        res = cobip.upper_domatic_cobipartite(g)
        out["Tr"] = res.value
    elif chosen == "split":
        res = split.upper_domatic_split(g, cls.split)
        out["Tr"] = res.value
    elif chosen == "tree":
        res = tree.transitivity_tree(g)
        out["Tr"] = res.value
    else:
        res = unicyclic.transitivity_unicyclic(g)
        out["Tr"] = res.value
    out["D"] = res.value
    out["witness"] = res.witness.as_lists()
    return out


def cmd_solve(args) -> int:
    g = read_graph(args.input, args.format, args.stdin)
    out = solve_graph(g, args.method, args.force)
    if args.json:
        print(json.dumps(out, sort_keys=True))
    else:
        print(f"n={out['n']} m={out['m']} tags={','.join(out['tags'])}")
        print(f"method={out['method']} D={out['D']} Tr={out['Tr']}")
        for i, block in enumerate(out["witness"], start=1):
            print(f"V{i}: {' '.join(map(str, block))}")
    return EXIT_OK


# -- check -------------------------------------------------------------------


def cmd_check(args) -> int:
    g = read_graph(args.graph, args.format)
    try:
        pi = parse_partition(Path(args.partition).read_text())
        kind = classify_partition(g, pi)
    except (ParseError, PartitionError, OSError) as exc:
        raise CliError(f"bad partition: {exc}", EXIT_PARSE) from exc
    rep = report(g, pi)
    if args.json:
        print(json.dumps(rep, sort_keys=True))
    else:
        print("digraph:")
        for row in rep["digraph"]:
            print("  " + " ".join(map(str, row)))
        print("kind: " + " ".join(f"{k}={int(v)}" for k, v in rep["kind"].items()))
        print(f"sources: {rep['sources']}  sinks: {rep['sinks']}  in-degrees: {rep['in_degrees']}")
    ok = kind.holds(args.kind)
    print(f"{args.kind}: {'yes' if ok else 'no'}")
    return EXIT_OK if ok else EXIT_FAIL


# -- gen ---------------------------------------------------------------------


def make_graph(family: str, n: int, seed: int) -> Graph:
    try:
        if family == "path":
            return generators.path(n)
        if family == "cycle":
            return generators.cycle(n)
        if family == "complete":
            return generators.complete(n)
        if family == "star":
            return generators.star(n - 1) if n >= 2 else generators.star(0)
        if family == "tree":
            return generators.random_tree(n, seed)
        if family == "unicyclic":
            return generators.random_unicyclic(n, seed)
        if family == "split":
            return generators.random_split(n, seed)
        if family == "chain":
            if n < 2:
                raise ValueError("chain graph needs n >= 2")
            return generators.random_bipartite_chain(n // 2, n - n // 2, seed)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc
    raise CliError(f"unknown family {family!r}", EXIT_PARSE)


def cmd_gen(args) -> int:
    if args.count < 1:
        raise CliError("--count must be positive", EXIT_PARSE)
    rng = random.Random(args.seed)
    for i in range(args.count):
        g = make_graph(args.family, args.n, rng.randrange(1 << 30) if i else args.seed)
        text = g.to_edge_list()
        if args.out_dir:
            Path(args.out_dir).mkdir(parents=True, exist_ok=True)
            (Path(args.out_dir) / f"{args.family}_{args.n}_{i}.txt").write_text(text)
        else:
            if args.count > 1:
                print(f"# graph {i}")
            sys.stdout.write(text)
    return EXIT_OK


# -- hunt --------------------------------------------------------------------


def parse_range(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(".."))
    except ValueError as exc:
        raise CliError(f"--n-range must look like a..b, got {text!r}", EXIT_PARSE) from exc
    return a, b


def hunt_stream(lo: int, hi: int, source: str, seed: int, count: int) -> Iterator[Graph]:
    if source == "exhaustive":
        for n in range(lo, hi + 1):
            if n > 8:
                log.warning("exhaustive enumeration stops at n = 8; skipping n = %d", n)
                continue
            yield from generators.nonisomorphic_graphs(n)
        return
    rng = random.Random(seed)
    if lo > hi:
        return
    for _ in range(count):
        n = rng.randint(lo, hi)
        yield generators.gnp(n, rng.random(), rng.randrange(1 << 30))


def _hunt_job(item: tuple[str, int]) -> dict:
    g6, max_n = item
    return hunt_one(Graph.from_graph6(g6), max_n).as_dict()


def summarize(records: Sequence[dict]) -> dict:
    by_d: dict[str, dict[str, int]] = {}
    status: dict[str, int] = {}
    for r in records:
        row = by_d.setdefault(str(r["D"]), {"sink": 0, "no_sink": 0})
        row["sink" if r["sink_exists"] else "no_sink"] += 1
        status[r["status"]] = status.get(r["status"], 0) + 1
    return {"graphs": len(records), "by_D": by_d, "status": status}


def cmd_hunt(args) -> int:
    lo, hi = parse_range(args.n_range)
    graphs = hunt_stream(lo, hi, args.source, args.seed, args.count)
    items = [(g.graph6(), args.max_n) for g in graphs if g.n]
    if args.workers > 1:
        with Pool(args.workers) as pool:
            records = pool.map(_hunt_job, items, chunksize=8)
    else:
        records = [_hunt_job(it) for it in items]
    if args.out:
        with open(args.out, "w") as fh:
            for r in records:
                fh.write(json.dumps(r, sort_keys=True) + "\n")
    for r in records:
        if r["status"] in ("COUNTEREXAMPLE", "CONTRADICTION"):
            log.error("%s: %s", r["status"], r["graph6"])
    print(json.dumps(summarize(records), sort_keys=True))
    return EXIT_OK


# -- selftest ----------------------------------------------------------------


@dataclass
class SelftestFailure:
    suite: str
    graph: Graph
    detail: str


def _suites(max_n: int) -> list[tuple[str, Callable[[], Iterator[tuple[Graph, str | None]]]]]:
    def trees():
        for n in range(1, max_n + 1):
            for g in generators.nonisomorphic_trees(n):
                a, b = tree.transitivity_tree(g).value, oracle.transitivity_bf(g).value
                yield g, None if a == b else f"tree {a} vs oracle {b}"

    def unicyclics():
        for n in range(3, max_n + 1):
            for g in generators.unicyclic_graphs(n):
                a, b = unicyclic.transitivity_unicyclic(g).value, oracle.upper_domatic_bf(g).value
                yield g, None if a == b else f"unicyclic {a} vs oracle {b}"

    def splits():
        for n in range(1, max_n + 1):
            for g in generators.split_graphs(n):
                a, b = split.upper_domatic_split(g).value, oracle.upper_domatic_bf(g).value
                yield g, None if a == b else f"split {a} vs oracle {b}"

    def cobips():
        for n in range(1, max_n + 1):
            for g in generators.cobipartite_graphs(n):
                a, b = oracle.transitivity_bf(g).value, oracle.upper_domatic_bf(g).value
                yield g, None if a == b else f"Tr {a} vs D {b}"

    def dispatch():
        for n in range(1, min(max_n, 6) + 1):
            for g in generators.nonisomorphic_graphs(n):
                a = solve_graph(g, "auto")["D"]
                b = oracle.upper_domatic_bf(g).value
                yield g, None if a == b else f"auto {a} vs oracle {b}"

    return [("tree", trees), ("unicyclic", unicyclics), ("split", splits), ("cobip", cobips), ("auto", dispatch)]


def run_selftest(max_n: int) -> list[SelftestFailure]:
    failures = []
    for name, suite in _suites(max_n):
        start, count = time.perf_counter(), 0
        for g, problem in suite():
            count += 1
            if problem:
                failures.append(SelftestFailure(name, g, problem))
        log.info("%s: %d graphs in %.1fs", name, count, time.perf_counter() - start)
        print(f"{name}: {count} graphs, {sum(f.suite == name for f in failures)} failures")
    return failures


def cmd_selftest(args) -> int:
    failures = run_selftest(6 if args.quick else 7)
    for f in failures:
        print(f"FAIL [{f.suite}] {f.detail}\n{f.graph.to_edge_list()}", end="")
    return EXIT_FAIL if failures else EXIT_OK


# -- wiring ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="updomatic", description="Upper domatic number and transitivity of graphs.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="compute D(G) and Tr(G) with a witness")
    s.add_argument("--input", help="graph file (default stdin)")
    s.add_argument("--stdin", action="store_true")
    s.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
    s.add_argument("--method", choices=METHODS, default="auto")
    s.add_argument("--force", action="store_true", help=f"allow exhaustive search above n = {ORACLE_CAP}")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("check", help="inspect a vertex partition")
    c.add_argument("--graph", required=True)
    c.add_argument("--partition", required=True)
    c.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
    c.add_argument("--kind", choices=KINDS, default="upper-domatic")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    g = sub.add_parser("gen", help="emit graphs as edge lists")
    g.add_argument("family", choices=("path", "cycle", "complete", "star", "tree", "unicyclic", "split", "chain"))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--out-dir")
    g.set_defaults(func=cmd_gen)

    h = sub.add_parser("hunt", help="look for graphs without a sink-bearing D-partition")
    h.add_argument("--n-range", default="4..6")
    h.add_argument("--source", choices=("exhaustive", "random"), default="exhaustive")
    h.add_argument("--count", type=int, default=200, help="graphs drawn when --source random")
    h.add_argument("--seed", type=int, default=0)
    h.add_argument("--workers", type=int, default=1)
    h.add_argument("--max-n", type=int, default=ORACLE_CAP)
    h.add_argument("--out")
    h.set_defaults(func=cmd_hunt)

    t = sub.add_parser("selftest", help="cross-check every solver against exhaustive search")
    t.add_argument("--quick", action="store_true", help="stop at n = 6")
    t.set_defaults(func=cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except GraphClassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
