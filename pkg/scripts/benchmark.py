"""Time the polynomial solvers against exhaustive search on random inputs."""

import argparse
import random
import time
from dataclasses import dataclass

from updomatic import generators as gen
from updomatic.oracle import upper_domatic_bf
from updomatic.split import upper_domatic_split
from updomatic.tree import transitivity_tree
from updomatic.unicyclic import transitivity_unicyclic


@dataclass
class BenchConfig:
    sizes: tuple[int, ...] = (8, 10, 11, 20, 40)
    oracle_cap: int = 11
    per_size: int = 20
    seed: int = 1


FAMILIES = {
    "tree": (gen.random_tree, transitivity_tree),
    "unicyclic": (gen.random_unicyclic, transitivity_unicyclic),
    "split": (gen.random_split, upper_domatic_split),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--per-size", type=int, default=BenchConfig.per_size)
    cfg = BenchConfig(per_size=ap.parse_args().per_size)
    rng = random.Random(cfg.seed)
    print(f"{'family':<10} {'n':>3} {'solver ms':>10} {'oracle ms':>10}")
    for name, (make, solve) in FAMILIES.items():
        for n in cfg.sizes:
            graphs = [make(n, rng.randrange(1 << 30)) for _ in range(cfg.per_size)]
            t0 = time.perf_counter()
            fast = [solve(g).value for g in graphs]
            t1 = time.perf_counter()
            per = 1000 / cfg.per_size
            if n > cfg.oracle_cap:
                print(f"{name:<10} {n:>3} {(t1 - t0) * per:>10.2f} {'-':>10}")
                continue
            slow = [upper_domatic_bf(g).value for g in graphs]
            t2 = time.perf_counter()
            assert fast == slow, name
            print(f"{name:<10} {n:>3} {(t1 - t0) * per:>10.2f} {(t2 - t1) * per:>10.2f}")


if __name__ == "__main__":
    main()
