"""D = 6 graphs: does some (or every) D-partition have a block of in-degree >= 3?"""

import argparse
import json
import random
import time

from updomatic.generators import gnp, nonisomorphic_graphs
from updomatic.oracle import upper_domatic_bf
from updomatic.sinkset import d6_indegree3_check, d6_indegree_stats


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--random", type=int, default=1500)
    ap.add_argument("--seed", type=int, default=6)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    graphs = [g for n in range(6, 8) for g in nonisomorphic_graphs(n) if g.max_degree >= 5]
    graphs += [gnp(rng.randint(7, 9), rng.uniform(0.5, 0.9), rng.randrange(1 << 30)) for _ in range(args.random)]
    start = time.perf_counter()
    found = violations = every = partitions = 0
    for g in graphs:
        if upper_domatic_bf(g).value != 6:
            continue
        found += 1
        try:
            d6_indegree3_check(g, 6)
        except AssertionError:
            violations += 1
            print("violation:", g.graph6())
        good, total = d6_indegree_stats(g)
        partitions += total
        every += good == total
    print(json.dumps({
        "D=6 graphs": found,
        "violations": violations,
        "graphs where every D-partition qualifies": every,
        "D-partitions inspected": partitions,
        "elapsed": round(time.perf_counter() - start, 1),
    }, indent=1))


if __name__ == "__main__":
    main()
