"""Exercise the five-block case analysis.

Two sources: planted graphs whose given partition has every block dominated
by exactly two others, and a random scan of 2K2-free graphs with D = 5.
"""

import argparse
import json
import random
import time
from collections import Counter
from dataclasses import dataclass

from updomatic.generators import gnp
from updomatic.graph import is_2k2_free
from updomatic.oracle import exists_sink_D_partition, upper_domatic_bf
from updomatic.sinkset import PreconditionError, d5_case_analysis, planted_case5_instance, sink_by_cases


@dataclass
class ScanConfig:
    planted: int = 2000
    random_graphs: int = 10_000
    max_n: int = 11
    seed: int = 0


def planted_scan(cfg: ScanConfig) -> Counter:
    counts: Counter = Counter()
    rng = random.Random(cfg.seed)
    for _ in range(cfg.planted):
        inst = planted_case5_instance(rng.randrange(1 << 30))
        if inst is None:
            counts["pattern lost"] += 1
            continue
        g, pi = inst
        if g.n > cfg.max_n or upper_domatic_bf(g).value != 5:
            counts["D != 5 or too large"] += 1
            continue
        try:
            res = d5_case_analysis(g, pi, 5)
        except PreconditionError:
            counts["block sees both dominated blocks"] += 1
            continue
        cert = res.certificate or res.attempts[-1]
        counts[f"{res.status} {cert.subcase} {cert.construction}".strip()] += 1
        if res.status == "unresolved":
            counts[f"unresolved, sink exists: {exists_sink_D_partition(g, 5) is not None}"] += 1
        counts["2K2-free"] += is_2k2_free(g)
    return counts


def random_scan(cfg: ScanConfig) -> Counter:
    counts: Counter = Counter()
    rng = random.Random(cfg.seed + 1)
    for _ in range(cfg.random_graphs):
        g = gnp(rng.randint(6, 10), rng.uniform(0.3, 0.95), rng.randrange(1 << 30))
        if not is_2k2_free(g):
            continue
        counts["2K2-free"] += 1
        if g.max_degree < 4 or upper_domatic_bf(g).value != 5:
            continue
        route = sink_by_cases(g, 5)
        counts[f"D=5 route {route.route}"] += 1
        counts["violations"] += route.partition is None
    return counts


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--planted", type=int, default=ScanConfig.planted)
    ap.add_argument("--random", type=int, default=ScanConfig.random_graphs)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = ScanConfig(args.planted, args.random, seed=args.seed)
    start = time.perf_counter()
    out = {"planted": dict(planted_scan(cfg)), "random": dict(random_scan(cfg))}
    out["elapsed"] = round(time.perf_counter() - start, 1)
    print(json.dumps(out, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()
