"""Divide-and-conquer covers of complete uniform hypergraphs.

A balanced r-coloring properly colors every edge meeting at least p classes;
what is left lives inside a union of p-1 classes. Those unions are covered
recursively. Unions built from pairwise disjoint sets of classes are vertex
disjoint, so their sub-covers can share rounds: the (p-1)-subsets of the r
classes are split into parallel groups (a round schedule), and each group costs
as many rounds as its longest sub-cover.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .core import Coloring, Cover, CoverParams, uncovered_indices
from .counting import proper_count_for_sizes


@dataclass(frozen=True)
class RoundSchedule:
    r: int
    q: int
    groups: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def size(self) -> int:
        return len(self.groups)


@dataclass(frozen=True)
class SizeBound:
    value: float
    l: int
    formula_id: str
    raw: float


def schedule_length(r: int, q: int) -> int:
    """Number of parallel groups needed for the q-subsets of r classes."""
    return -(-math.comb(r, q) // (r // q))


def balanced_sizes(m: int, r: int) -> list[int]:
    return [m // r + (1 if i < m % r else 0) for i in range(r)]


def balanced_coloring(vertices: int | Sequence[int], r: int) -> Coloring:
    """Color the listed vertices in order, larger classes first.

    The result is indexed by position in ``vertices``.
    """
    m = vertices if isinstance(vertices, int) else len(vertices)
    if m < 1:
        raise ValueError("need at least one vertex")
    colors = [c for c, s in enumerate(balanced_sizes(m, r)) for _ in range(s)]
    return Coloring(tuple(colors), r)


@lru_cache(maxsize=None)
def _schedule(r: int, q: int) -> RoundSchedule:
    subsets = list(itertools.combinations(range(r), q))
    cap = r // q
    n_groups = schedule_length(r, q)
    groups: list[list[tuple[int, ...]]] = []
    used: list[int] = []  # bitmask of classes per group

    def place(i):
        if i == len(subsets):
            return True
        if len(subsets) - i > sum(cap - len(g) for g in groups) + (n_groups - len(groups)) * cap:
            return False
        s = subsets[i]
        bits = sum(1 << c for c in s)
        for g, mask in enumerate(used):
            if len(groups[g]) < cap and not mask & bits:
                groups[g].append(s)
                used[g] |= bits
                if place(i + 1):
                    return True
                groups[g].pop()
                used[g] &= ~bits
        if len(groups) < n_groups:
            groups.append([s])
            used.append(bits)
            if place(i + 1):
                return True
            groups.pop()
            used.pop()
        return False

    if not place(0):  # pragma: no cover - Baranyai's theorem rules this out
        raise RuntimeError(f"no round schedule for r={r}, q={q}")
    return RoundSchedule(r, q, tuple(tuple(g) for g in groups))


def round_schedule(r: int, p: int) -> RoundSchedule:
    """Split the (p-1)-subsets of ``range(r)`` into groups of pairwise disjoint subsets."""
    CoverParams(r, p)
    return _schedule(r, p - 1)


def smallest_offset(k: int, p: int) -> int:
    """Smallest l in [0, p-2] with (k-1-l) divisible by p-1."""
    for l in range(p - 1):
        if (k - 1 - l) % (p - 1) == 0:
            return l
    raise ValueError(f"no valid offset for k={k}, p={p}")  # pragma: no cover


def single_coloring_capacity(k: int, r: int, p: int) -> int:
    """Most vertices one r-coloring can carry while covering every k-subset.

    Every p-1 classes together must hold at most k-1 vertices.
    """
    q = p - 1
    b = (k - 1) // q
    return (k - 1) + (r - q) * b


def base_case_sizes(m: int, k: int, r: int, p: int) -> list[int]:
    """Class sizes for a one-coloring cover of an m-vertex complete k-uniform hypergraph."""
    q = p - 1
    b, extra = divmod(k - 1, q)
    if m > single_coloring_capacity(k, r, p):
        raise ValueError(f"{m} vertices need more than one coloring")
    if -(-m // r) <= b:
        return balanced_sizes(m, r)
    sizes = [b + 1] * extra + [b] * (r - extra)
    surplus = sum(sizes) - m
    i = 0
    while surplus:
        sizes[i] -= 1
        surplus -= 1
        i = (i + 1) % extra if extra else 0
    return sizes


def _sizes_to_row(sizes) -> np.ndarray:
    return np.repeat(np.arange(len(sizes), dtype=np.int8), sizes)


@lru_cache(maxsize=None)
def _build(m: int, k: int, r: int, p: int) -> np.ndarray:
    if m < k:
        return np.zeros((0, m), dtype=np.int8)
    if m <= single_coloring_capacity(k, r, p):
        return _sizes_to_row(base_case_sizes(m, k, r, p))[None, :]
    sizes = balanced_sizes(m, r)
    starts = np.concatenate([[0], np.cumsum(sizes)])
    rounds = [_sizes_to_row(sizes)[None, :]]
    for group in _schedule(r, p - 1).groups:
        parts = []
        for classes in group:
            pos = np.concatenate([np.arange(starts[c], starts[c + 1]) for c in classes])
            sub = _build(len(pos), k, r, p)
            if len(sub):
                parts.append((pos, sub))
        if not parts:
            continue
        length = max(len(sub) for _, sub in parts)
        block = np.zeros((length, m), dtype=np.int8)
        for pos, sub in parts:
            # shorter sub-covers repeat their last coloring
            block[:, pos] = sub[np.minimum(np.arange(length), len(sub) - 1)]
        rounds.append(block)
    out = np.concatenate(rounds, axis=0)
    # padding repeats colorings; a cover is a set, so keep first occurrences only
    _, first = np.unique(out, axis=0, return_index=True)
    out = out[np.sort(first)]
    out.setflags(write=False)
    return out


def cover_general_array(m: int, k: int, r: int, p: int) -> np.ndarray:
    """The divide-and-conquer cover of the complete k-uniform hypergraph on m vertices, as rows."""
    p = CoverParams.for_k(k, r, p).p
    if m < k:
        raise ValueError(f"need at least k={k} vertices, got {m}")
    return _build(m, k, r, p)


def cover_general(vertices: int | Sequence[int], k: int, r: int, p: int) -> Cover:
    """Strong (r, p) cover of the complete k-uniform hypergraph on the given vertices.

    The colorings are indexed by position in ``vertices``.
    """
    m = vertices if isinstance(vertices, int) else len(vertices)
    return Cover.from_array(cover_general_array(m, k, r, p), r)


def complete_uncovered(m: int, k: int, rows, p: int) -> np.ndarray:
    """Edges of the complete k-uniform hypergraph on m vertices missed by ``rows``.

    Colorings are tried in decreasing order of how many edges they color
    properly (a function of class sizes alone), which keeps the surviving
    edge set small early on.
    """
    rows = np.asarray(rows, dtype=np.int64)
    if rows.ndim != 2 or rows.shape[1] != m:
        raise ValueError(f"expected colorings of {m} vertices")
    need = min(p, k)
    cache: dict[tuple[int, ...], int] = {}
    scores = []
    for row in rows:
        sizes = tuple(sorted(np.bincount(row).tolist(), reverse=True))
        if sizes not in cache:
            cache[sizes] = proper_count_for_sizes(sizes, k, need)
        scores.append(cache[sizes])
    order = np.argsort(-np.array(scores, dtype=np.float64), kind="stable")
    edges = np.array(list(itertools.combinations(range(m), k)), dtype=np.int64).reshape(-1, k)
    return edges[uncovered_indices(edges, rows[order], need)]


def knk33_cover(n: int, k: int) -> Cover:
    return cover_general(n, k, 3, 3)


def knk43_cover(n: int, k: int) -> Cover:
    return cover_general(n, k, 4, 3)


def size_bound(n: int, k: int, r: int, p: int) -> SizeBound:
    """Closed-form size estimate for the divide-and-conquer cover.

    Uses exact exponents log_{r/(p-1)} D rather than rounded decimals and
    reports at least 1.
    """
    p = CoverParams.for_k(k, r, p).p
    q = p - 1
    l = smallest_offset(k, p)
    c = k - 1 - l
    ratio = r / q
    d = schedule_length(r, q)
    raw = (n * q / (c * r)) ** math.log(d, ratio) + math.log(n / c, ratio) - 1
    formula = {(3, 3): "knk33", (4, 3): "knk43"}.get((r, p), "general")
    return SizeBound(value=max(raw, 1.0), l=l, formula_id=formula, raw=raw)
