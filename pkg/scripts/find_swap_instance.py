"""Smallest co-bipartite graph and upper domatic partition where the
source-set transform actually swaps two vertices."""

from updomatic.cobip import source_set_transform
from updomatic.generators import cobipartite_graphs
from updomatic.oracle import iter_partitions, upper_domatic_bf


def main() -> None:
    for n in range(2, 9):
        for g in cobipartite_graphs(n):
            for k in range(1, upper_domatic_bf(g).value + 1):
                for pi in iter_partitions(g, k, "upper"):
                    out = source_set_transform(g, pi)
                    if out != pi:
                        print(f"n={n} edges={sorted(g.edges())}")
                        print(f"before: {pi.as_lists()}\nafter:  {out.as_lists()}")
                        return
    print("no swap found")


if __name__ == "__main__":
    main()
