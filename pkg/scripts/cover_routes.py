"""Compare the two combinatorial depth routes for cover ideals with the oracle.

Prints a confusion table for the forbidden-configuration test and for the
facet test, plus a few sample graphs where the former is wrong.

    python3 scripts/cover_routes.py --n 4 5 --samples 3
"""

from __future__ import annotations

import argparse
from collections import Counter

from powerdepth.corpus import covered_graphs
from powerdepth.coverideal import cover_depth_class, cover_depth_class_facets, cover_ideal
from powerdepth.oracle import depth_class_oracle, square


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[4, 5])
    ap.add_argument("--samples", type=int, default=3)
    args = ap.parse_args()
    for n in args.n:
        configs: Counter = Counter()
        facets: Counter = Counter()
        samples = []
        for g in covered_graphs(n):
            truth = depth_class_oracle(square(cover_ideal(g)))
            claimed = cover_depth_class(g)
            configs[(claimed.value if claimed else "-", truth.value)] += 1
            facets[(cover_depth_class_facets(g).value, truth.value)] += 1
            if claimed is not None and claimed is not truth and len(samples) < args.samples:
                samples.append((g.edge_lists(), claimed.value, truth.value))
        print(f"n={n}")
        for name, table in (("configurations", configs), ("facets", facets)):
            wrong = sum(v for (a, b), v in table.items() if a not in (b, "-"))
            print(f"  {name}: {wrong} wrong; (claimed, oracle) -> {dict(sorted(table.items()))}")
        for edges, claimed, truth in samples:
            print(f"  e.g. {edges}: configurations say {claimed}, oracle says {truth}")


if __name__ == "__main__":
    main()
