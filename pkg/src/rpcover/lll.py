"""Random covers: union-bound sampling and Moser-Tardos resampling.

One uniform r-coloring leaves a fixed k-edge with fewer than p colors with
probability at most C(r, p-1) ((p-1)/r)^k, so x independent colorings all fail
on it with probability at most base^-x where

    base = r^k / ((p-1)^k C(r, p-1)).

That gives two sufficient conditions for a cover of size x: the union bound
``m <= base^x / 2`` (then a random draw works with probability at least 1/2)
and the local lemma ``d <= base^x / e - 1`` on the dependency d.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .core import Cover, CoverParams, Hypergraph, dependency, distinct_color_counts


class ResampleLimit(RuntimeError):
    """The resampling or redraw cap was hit before a cover appeared."""


class ThresholdViolation(ValueError):
    """Guaranteed mode was asked to run outside the local-lemma regime."""


@dataclass(frozen=True)
class LLLParams:
    r: int
    p: int
    k: int
    x: int
    seed: int = 0
    max_resamples: int = 1_000_000

    def __post_init__(self):
        CoverParams.for_k(self.k, self.r, self.p)
        if self.x < 1:
            raise ValueError("x must be at least 1")

    @property
    def base(self) -> float:
        return lll_base(self.k, self.r, self.p)


def lll_base(k: int, r: int, p: int) -> float:
    p = CoverParams.for_k(k, r, p).p
    return r**k / ((p - 1) ** k * math.comb(r, p - 1))


def sufficient_regime(k: int, r: int, p: int) -> bool:
    """The textbook conditions k >= 2p-1 and r >= e(p-1) under which base > 1 is assured."""
    return k >= 2 * p - 1 and r >= math.e * (p - 1)


def _smallest_x(target: float, base: float) -> int | None:
    """Smallest x >= 1 with base**x >= target, or None when base <= 1."""
    if base <= 1:
        return None
    x = max(1, math.ceil(math.log(target) / math.log(base))) if target > 1 else 1
    # guard against float error at the boundary
    while x > 1 and base ** (x - 1) >= target:
        x -= 1
    while base**x < target:
        x += 1
    return x


def min_x_edge_bound(m: int, k: int, r: int, p: int) -> int | None:
    """Smallest x with m <= base^x / 2; None when base <= 1."""
    return _smallest_x(2 * m, lll_base(k, r, p))


def min_x_dependency_bound(d: int, k: int, r: int, p: int) -> int | None:
    """Smallest x with d <= base^x / e - 1; None when base <= 1."""
    return _smallest_x(math.e * (d + 1), lll_base(k, r, p))


def dependency_threshold(k: int, r: int, p: int, x: int) -> float:
    return lll_base(k, r, p) ** x / math.e - 1


def edge_threshold(k: int, r: int, p: int, x: int) -> float:
    return lll_base(k, r, p) ** x / 2


def bad_event_probability_p3(k: int, r: int) -> Fraction:
    """Chance a uniform r-coloring gives a fixed k-edge fewer than 3 colors."""
    one = Fraction(1, r)
    return math.comb(r, 2) * ((2 * one) ** k - 2 * one**k) + one ** (k - 1)


def enumerate_bad_fraction(k: int, r: int, p: int) -> Fraction:
    """Exact fraction of the r^k colorings of one k-edge using fewer than min(p, k) colors."""
    need = min(p, k)
    bad = sum(1 for c in product(range(r), repeat=k) if len(set(c)) < need)
    return Fraction(bad, r**k)


def _check(G: Hypergraph, rows: np.ndarray, need: int) -> np.ndarray:
    """Per-edge flag: properly colored by some row."""
    if G.m == 0:
        return np.zeros(0, dtype=bool)
    return (distinct_color_counts(G.edge_array(), rows) >= need).any(axis=0)


def mtc_cover(
    G: Hypergraph,
    r: int,
    p: int,
    x: int,
    seed: int = 0,
    max_resamples: int = 1_000_000,
    forced: bool = False,
) -> tuple[Cover, int]:
    """Moser-Tardos resampling for a cover of x colorings.

    The bad event of an edge is "no coloring gives it min(p, k) colors". While
    one holds, take the lowest-indexed such edge and redraw all x colors of each
    of its vertices. Without ``forced`` the dependency must meet the local-lemma
    threshold.
    """
    params = LLLParams(r, p, G.k, x, seed, max_resamples)
    need = min(params.p, G.k)
    if not forced:
        d = dependency(G)
        limit = dependency_threshold(G.k, r, params.p, x)
        if d > limit:
            raise ThresholdViolation(f"dependency {d} exceeds {limit:.3f} for x={x}; use forced mode")
    rng = np.random.default_rng(seed)
    rows = rng.integers(0, r, size=(x, G.n), dtype=np.int64)
    if G.m == 0:
        return Cover.from_array(rows, r), 0
    edges = G.edge_array()
    good = _check(G, rows, need)
    # edges sharing a vertex with edge i, including i
    touching = [[] for _ in range(G.n)]
    for i, e in enumerate(G.edges):
        for v in e:
            touching[v].append(i)
    resamples = 0
    while not good.all():
        if resamples >= max_resamples:
            raise ResampleLimit(f"no cover after {max_resamples} resamplings")
        i = int(np.argmin(good))
        verts = edges[i]
        rows[:, verts] = rng.integers(0, r, size=(x, len(verts)))
        resamples += 1
        near = np.unique(np.concatenate([touching[v] for v in verts]))
        good[near] = (distinct_color_counts(edges[near], rows) >= need).any(axis=0)
    return Cover.from_array(rows, r), resamples


def union_bound_cover(
    G: Hypergraph, r: int, p: int, x: int, seed: int = 0, max_iters: int = 10_000
) -> tuple[Cover, int]:
    """Draw x uniform colorings at a time until they cover G.

    Returns the cover and the number of draws used.
    """
    params = LLLParams(r, p, G.k, x, seed)
    need = min(params.p, G.k)
    rng = np.random.default_rng(seed)
    for it in range(1, max_iters + 1):
        rows = rng.integers(0, r, size=(x, G.n), dtype=np.int64)
        if _check(G, rows, need).all():
            return Cover.from_array(rows, r), it
    raise ResampleLimit(f"no cover after {max_iters} draws")
