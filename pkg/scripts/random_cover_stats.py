"""Resampling and redraw statistics for the random cover algorithms.

    python scripts/random_cover_stats.py [--seeds 1000]
"""
import argparse
import math

import numpy as np

from rpcover.core import dependency, random_hypergraph, uncovered_edges
from rpcover.lll import (
    dependency_threshold,
    edge_threshold,
    lll_base,
    min_x_dependency_bound,
    min_x_edge_bound,
    mtc_cover,
    union_bound_cover,
)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, default=1000)
    ap.add_argument("--n", type=int, default=30)
    ap.add_argument("--k", type=int, default=5)
    ap.add_argument("--r", type=int, default=6)
    ap.add_argument("--p", type=int, default=3)
    args = ap.parse_args()
    n, k, r, p = args.n, args.k, args.r, args.p
    print(f"base = {lll_base(k, r, p):.4f} for k={k} r={r} p={p}")

    for x in (1, 2, 3):
        m = math.floor(edge_threshold(k, r, p, x))
        if m < 1 or m > math.comb(n, k):
            continue
        iters = [union_bound_cover(random_hypergraph(n, k, m, s), r, p, x, seed=s)[1] for s in range(args.seeds)]
        print(f"union bound, x={x}, m={m}: mean draws {np.mean(iters):.3f}, max {max(iters)}")

    for m in (20, 40, 80):
        for x in (1, 2):
            counts, failures, skipped = [], 0, 0
            for s in range(args.seeds // 10):
                G = random_hypergraph(n, k, m, s)
                if dependency(G) > dependency_threshold(k, r, p, x):
                    skipped += 1
                    continue
                cover, res = mtc_cover(G, r, p, x, seed=s)
                counts.append(res)
                failures += bool(uncovered_edges(G, cover, p))
            if counts:
                print(f"resampling, m={m}, x={x}: {len(counts)} runs, mean {np.mean(counts):.2f} resamplings, "
                      f"{failures} invalid, {skipped} outside the threshold")
            else:
                print(f"resampling, m={m}, x={x}: every instance outside the threshold")

    d = dependency(random_hypergraph(n, k, 40, 0))
    print(f"smallest x: by edges (m=40) {min_x_edge_bound(40, k, r, p)}, by dependency (d={d}) {min_x_dependency_bound(d, k, r, p)}")


if __name__ == "__main__":
    main()
