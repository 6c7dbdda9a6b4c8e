"""Sizes of the divide-and-conquer covers against the closed-form bound.

    python scripts/construction_grid.py [--n-max 40] [--csv grid.csv]
"""
import argparse
import csv
import math
import sys
import time

from rpcover.construct import complete_uncovered, cover_general_array, size_bound

GRID = [(3, 3), (4, 3), (5, 3), (4, 4), (5, 4)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=40)
    ap.add_argument("--no-verify", action="store_true")
    ap.add_argument("--csv")
    args = ap.parse_args()

    rows = []
    t0 = time.perf_counter()
    for r, p in GRID:
        for k in (3, 4, 5):
            for n in range(k, args.n_max + 1):
                cover = cover_general_array(n, k, r, p)
                bound = size_bound(n, k, r, p)
                valid = True if args.no_verify else not len(complete_uncovered(n, k, cover, p))
                rows.append({"n": n, "k": k, "r": r, "p": p, "size": len(cover), "bound": round(bound.value, 3),
                             "within": len(cover) <= math.ceil(bound.value), "valid": valid})
    elapsed = time.perf_counter() - t0

    print(f"{'r,p':>5} {'k':>2} | sizes at n = 10, 20, 30, {args.n_max} (bound)")
    for r, p in GRID:
        for k in (3, 4, 5):
            pick = [row for row in rows if (row["r"], row["p"], row["k"]) == (r, p, k) and row["n"] in (10, 20, 30, args.n_max)]
            cells = ", ".join(f"{row['size']} ({row['bound']:.0f})" for row in pick)
            print(f"{r},{p:<3} {k:>2} | {cells}")
    over = [row for row in rows if not row["within"]]
    print(f"\n{len(rows)} instances, {sum(row['valid'] for row in rows)} verified, "
          f"{len(over)} above the bound, {elapsed:.1f}s")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]))
            w.writeheader()
            w.writerows(rows)
    return 0 if all(row["valid"] for row in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
