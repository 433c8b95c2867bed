"""Depth-class census of I^2 over every covered labeled graph on n vertices.

    python3 scripts/census.py --n 4 5 --ideal cover
"""

from __future__ import annotations

import argparse
import time
from collections import Counter

from powerdepth.corpus import covered_graphs
from powerdepth.coverideal import cover_ideal
from powerdepth.oracle import depth_class_oracle, edge_ideal, square


def census(n: int, ideal: str) -> Counter:
    counts: Counter = Counter()
    for g in covered_graphs(n):
        j = edge_ideal(g) if ideal == "edge" else cover_ideal(g)
        counts[depth_class_oracle(square(j)).value] += 1
    return counts


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[4, 5])
    ap.add_argument("--ideal", choices=["edge", "cover"], default="edge")
    args = ap.parse_args()
    for n in args.n:
        start = time.perf_counter()
        counts = census(n, args.ideal)
        total = sum(counts.values())
        parts = ", ".join(f"{k}={counts.get(k, 0)}" for k in ("ZERO", "ONE", "GE_TWO"))
        print(f"n={n} {args.ideal}: {total} graphs, {parts} ({time.perf_counter() - start:.1f}s)")


if __name__ == "__main__":
    main()
