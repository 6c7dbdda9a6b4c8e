"""Brute-force reference implementations, independent of the package internals."""
from __future__ import annotations

import itertools
import math

import numpy as np


def all_edges(n, k):
    return list(itertools.combinations(range(n), k))


def _coverage(n, edges, cols, p):
    masks = np.zeros(len(cols), dtype=np.int64)
    for i, e in enumerate(edges):
        sub = np.sort(cols[:, list(e)], axis=1)
        distinct = 1 + (np.diff(sub, axis=1) != 0).sum(axis=1)
        masks |= (distinct >= min(p, len(e))).astype(np.int64) << i
    return np.unique(masks)


def _maximal(masks):
    """Drop masks contained in another mask."""
    keep = [m for m in masks.tolist() if not any(o != m and o & m == m for o in masks.tolist())]
    return np.array(keep, dtype=np.int64)


def edge_masks(n, edges, r, p):
    """Distinct bitmasks of edges properly colored by each of the r^n colorings."""
    edges = list(edges)
    if len(edges) > 62:
        raise ValueError("oracle handles at most 62 edges")
    cols = np.array(list(itertools.product(range(r), repeat=n)), dtype=np.int64)
    return _coverage(n, edges, cols, p)


def cover_number(n, edges, r, p, cap=8, max_states=3_000_000, complete=False):
    """Smallest x such that x colorings cover every edge, by dynamic programming
    over reachable unions of coverage masks.

    With ``complete`` the hypergraph must be complete, and the first coloring is
    taken non-decreasing: any coloring of the complete hypergraph becomes one by
    renaming vertices.
    """
    edges = list(edges)
    if not edges:
        return 1
    full = (1 << len(edges)) - 1
    masks = _maximal(edge_masks(n, edges, r, p))
    if complete:
        sorted_cols = np.array(list(itertools.combinations_with_replacement(range(r), n)), dtype=np.int64)
        reach = _coverage(n, edges, sorted_cols, p)
    else:
        reach = masks
    for x in range(1, cap + 1):
        if (reach == full).any():
            return x
        # one more coloring finishes from u exactly when some mask contains ~u
        missing = full & ~reach
        if any(((masks & m) == m).any() for m in missing.tolist()):
            return x + 1
        reach = np.unique((reach[:, None] | masks[None, :]).ravel())
        if len(reach) > max_states:
            raise RuntimeError("oracle state space too large")
    return None


def exactly_i_classes(n_prime, k, r, i):
    """Count k-subsets touching exactly i classes of the balanced coloring, by enumeration."""
    colors = [v * r // n_prime for v in range(n_prime)]
    return sum(1 for e in itertools.combinations(range(n_prime), k) if len({colors[v] for v in e}) == i)


def single_coloring_max(n, k, r, p):
    """Most k-subsets of n vertices one r-coloring gives min(p,k) colors, over all r^n colorings."""
    edges = np.array(all_edges(n, k))
    best = 0
    for col in itertools.product(range(r), repeat=n):
        c = np.array(col)[edges]
        distinct = 1 + (np.diff(np.sort(c, axis=1), axis=1) != 0).sum(axis=1)
        best = max(best, int((distinct >= min(p, k)).sum()))
    return best


def strong_chromatic(n, edges, p):
    """Fewest colors giving every edge min(p,|e|) distinct colors, by trying all colorings."""
    edges = list(edges)
    for c in range(1, n + 1):
        for col in itertools.product(range(c), repeat=n):
            if all(len({col[v] for v in e}) >= min(p, len(e)) for e in edges):
                return c
    return n


def ceil_log(value, base):
    x = 0
    while base**x < value:
        x += 1
    return x


def balanced_product(n, r):
    sizes = [n // r + (1 if i < n % r else 0) for i in range(r)]
    return math.prod(sizes)
