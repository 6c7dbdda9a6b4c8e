"""How many edges a single r-coloring can properly color.

``exactly_i_color_count`` is the inclusion-exclusion count of k-subsets touching
exactly ``i`` classes of a balanced coloring; ``m_bounds`` brackets the
single-coloring maximum with it, ``exact_m`` computes the maximum itself over
class-size profiles, and ``edge_lower_bound`` turns the maximum into a lower
bound on the cover number.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core import Coloring, Hypergraph, CoverParams

# refuse exact_m searches with more size profiles than this unless forced
MAX_PROFILES = 10**7


def binom(a: int, b: int) -> int:
    """Binomial coefficient that vanishes outside ``0 <= b <= a``."""
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


def exactly_i_color_count(n_prime: int, k: int, r: int, i: int) -> int:
    """k-subsets of a balanced r-coloring of ``n_prime`` vertices meeting exactly i classes."""
    if n_prime % r:
        raise ValueError(f"n'={n_prime} is not divisible by r={r}")
    if not 1 <= i <= r:
        raise ValueError(f"i={i} outside [1, {r}]")
    part = n_prime // r
    inner = sum((-1) ** j * binom(i, j) * binom((i - j) * part, k) for j in range(i + 1))
    return binom(r, i) * inner


@dataclass(frozen=True)
class MBracket:
    lower: int
    upper: int
    n1: int
    n2: int
    raw_lower: int


def m_bounds(n: int, k: int, r: int, p: int) -> MBracket:
    """Bracket on the most edges one r-coloring can properly (r, p) color."""
    p = CoverParams.for_k(k, r, p).p
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    n1 = (n // r) * r
    n2 = -(-n // r) * r
    total = math.comb(n, k)
    upper = total - sum(exactly_i_color_count(n1, k, r, i) for i in range(1, p))
    raw_lower = total - sum(exactly_i_color_count(n2, k, r, i) for i in range(1, p))
    return MBracket(lower=max(0, raw_lower), upper=upper, n1=n1, n2=n2, raw_lower=raw_lower)


def size_profiles(n: int, parts: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` into at most ``parts`` positive parts, non-increasing."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    if parts == 0:
        return
    for first in range(min(n, largest), 0, -1):
        if first * parts < n:
            break
        for rest in size_profiles(n - first, parts - 1, first):
            yield (first,) + rest


def count_profiles(n: int, parts: int) -> int:
    @lru_cache(maxsize=None)
    def f(n, parts, largest):
        if n == 0:
            return 1
        if parts == 0:
            return 0
        return sum(f(n - a, parts - 1, a) for a in range(1, min(n, largest) + 1))

    return f(n, parts, n)


def proper_count_for_sizes(sizes, k: int, p: int) -> int:
    """k-subsets meeting at least ``min(p, k)`` classes of the given sizes."""
    need = min(p, k)
    # ways[j][t]: choose j vertices touching t classes
    ways = [[0] * (len(sizes) + 1) for _ in range(k + 1)]
    ways[0][0] = 1
    for s in sizes:
        nxt = [row[:] for row in ways]
        for j in range(k + 1):
            for t in range(len(sizes)):
                w = ways[j][t]
                if not w:
                    continue
                for c in range(1, min(s, k - j) + 1):
                    nxt[j + c][t + 1] += w * math.comb(s, c)
        ways = nxt
    return sum(ways[k][t] for t in range(need, len(sizes) + 1))


def coloring_from_sizes(sizes, r: int) -> Coloring:
    colors = []
    for c, s in enumerate(sizes):
        colors.extend([c] * s)
    return Coloring(tuple(colors), r)


def exact_m(n: int, k: int, r: int, p: int, force: bool = False) -> tuple[int, Coloring]:
    """Exact single-coloring maximum and a coloring attaining it.

    Only class sizes matter on the complete hypergraph, so the search runs over
    size profiles. Ties go to the lexicographically smallest color vector.
    """
    p = CoverParams.for_k(k, r, p).p
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    if not force and count_profiles(n, r) > MAX_PROFILES:
        raise OverflowError(f"exact_m({n},{k},{r},{p}) exceeds {MAX_PROFILES} profiles; pass force=True")
    best, witness = -1, None
    for sizes in size_profiles(n, r):
        val = proper_count_for_sizes(sizes, k, p)
        col = coloring_from_sizes(sizes, r)
        if val > best or (val == best and col.colors < witness.colors):
            best, witness = val, col
    return best, witness


def best_m(n: int, k: int, r: int, p: int) -> tuple[int, str]:
    """The single-coloring maximum, exact when affordable, else its upper bracket."""
    try:
        return exact_m(n, k, r, p)[0], "exact"
    except OverflowError:
        return m_bounds(n, k, r, p).upper, "upper"


def edge_lower_bound(G: Hypergraph, r: int, p: int) -> int:
    if G.m == 0:
        return 0
    m, _ = best_m(G.n, G.k, r, p)
    return -(-G.m // m)
