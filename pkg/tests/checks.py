"""Whole-suite checks shared by the property tests and the acceptance run."""
from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from rpcover.core import Hypergraph, random_hypergraph, shrink
from rpcover.exact import ceil_log, exact_cover_number, strong_chromatic_number


@lru_cache(maxsize=None)
def solve(G: Hypergraph, r: int, p: int) -> int:
    res = exact_cover_number(G, r, p)
    if not res.exact:
        raise RuntimeError(f"search budget ran out on {G}, r={r}, p={p}")
    return res.value


def random_instances(count: int = 50, seed: int = 2024) -> list[Hypergraph]:
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(5, 8))
        k = int(rng.integers(3, 5))
        m = int(rng.integers(1, min(20, math.comb(n, k)) + 1))
        out.append(random_hypergraph(n, k, m, int(rng.integers(2**31))))
    return out


def monotonicity_violations(instances, r_max: int = 5) -> tuple[int, list[str]]:
    """Check the four comparisons on every (r, p) with 3 <= p <= min(r, k), r <= r_max.

    Returns the number of comparisons made and a description of each failure.
    """
    checked, bad = 0, []
    for G in instances:
        for r in range(3, r_max + 1):
            for p in range(3, min(r, G.k) + 1):
                here = solve(G, r, p)
                pairs = {
                    "more colors": solve(G, r + 1, p),
                    "smaller p": solve(G, r, p - 1),
                    "fewer colors and smaller p": solve(G, r - 1, p - 1),
                    "shrink": solve(shrink(G), r, p - 1),
                }
                for name, other in pairs.items():
                    checked += 1
                    if other > here:
                        bad.append(f"{name}: {other} > {here} for n={G.n} k={G.k} m={G.m} r={r} p={p}")
    return checked, bad


def log_relation_violations(cases) -> tuple[int, list[str]]:
    """Compare ceil(log_r chi(G,p)) with the cover number on (G, r, p) cases."""
    bad = []
    for G, r, p in cases:
        chi = strong_chromatic_number(G, min(p, G.k))
        value = solve(G, r, p)
        if ceil_log(chi, r) > value:
            bad.append(f"n={G.n} k={G.k} r={r} p={p}: log bound {ceil_log(chi, r)} > {value}")
    return len(cases), bad
