"""Exact strong (r, p) cover numbers and p-strong chromatic numbers.

The cover search is iterative deepening on the cover size over a set-cover
formulation: every coloring is reduced to the set of edges it properly colors,
colorings are taken up to renaming of colors (restricted growth strings), equal
sets are merged and dominated sets dropped. At each node the search branches on
the uncovered edge with the fewest covering colorings; a sibling excludes the
colorings tried before it. A node is pruned when the ``depth`` best remaining
colorings together cannot reach the number of uncovered edges.

On complete hypergraphs the first coloring is fixed to one representative per
class-size profile, and colorings sharing an edge set with an earlier profile
are excluded from later profiles' subtrees.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .core import Coloring, Cover, CoverParams, Hypergraph, distinct_color_counts, two_section
from .counting import best_m, size_profiles

# refuse to materialise more canonical colorings than this
MAX_COLORINGS = 2_000_000


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    x_max: int = 12
    node_budget: int = 2_000_000
    vertex_symmetry: bool | None = None  # None: on exactly when G is complete
    parallel_width: int = 1
    chromatic_budget: int = 200_000

    def __post_init__(self):
        if self.x_max < 1:
            raise ValueError("x_max must be at least 1")


@dataclass(frozen=True)
class Bound:
    name: str
    value: int
    detail: str = ""


@dataclass(frozen=True)
class BoundsReport:
    lower: int
    bounds: tuple[Bound, ...]

    def by_name(self) -> dict[str, int]:
        return {b.name: b.value for b in self.bounds}


@dataclass(frozen=True)
class ExactResult:
    """Outcome of an exact search.

    ``lower == upper`` means the value is exact. Otherwise the search ran out of
    budget (or hit ``x_max``) and the cover number lies in ``[lower, upper]``;
    ``upper`` is ``None`` when no cover was found at all.
    """

    lower: int
    upper: int | None
    witness: Cover | None
    nodes: int
    bounds_used: tuple[Bound, ...] = ()
    exhausted_depths: tuple[int, ...] = ()

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None

    def label(self) -> str:
        if self.exact:
            return str(self.lower)
        hi = "-" if self.upper is None else str(self.upper)
        return f"[{self.lower},{hi}]"


# ---------------------------------------------------------------------------
# canonical colorings


def _rgs(n: int, r: int) -> Iterator[tuple[int, ...]]:
    a = [0] * n

    def rec(i, top):
        if i == n:
            yield tuple(a)
            return
        for c in range(min(top + 2, r)):
            a[i] = c
            yield from rec(i + 1, max(top, c))

    if n == 0:
        yield ()
        return
    yield from rec(1, 0)


def count_canonical(n: int, r: int) -> int:
    """Set partitions of n elements into at most r blocks."""
    # Stirling numbers of the second kind, row by row
    row = [1] + [0] * r
    for _ in range(n):
        row = [0] + [j * row[j] + row[j - 1] for j in range(1, r + 1)]
    return sum(row)


def enumerate_canonical_colorings(n: int, r: int, vertex_symmetry: bool = False) -> Iterator[Coloring]:
    """One coloring per orbit under color renaming (and vertex relabelling if asked)."""
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    if vertex_symmetry:
        for sizes in size_profiles(n, r):
            colors = [c for c, s in enumerate(sizes) for _ in range(s)]
            yield Coloring(tuple(colors), r)
        return
    for a in _rgs(n, r):
        yield Coloring(a, r)


def canonical_array(n: int, r: int) -> np.ndarray:
    count = count_canonical(n, r)
    if count > MAX_COLORINGS:
        raise OverflowError(f"{count} canonical colorings of {n} vertices with {r} colors")
    return np.array(list(_rgs(n, r)), dtype=np.int64).reshape(count, n)


def _profile(row) -> tuple[int, ...]:
    counts = np.bincount(row)
    return tuple(sorted((int(c) for c in counts if c), reverse=True))


# ---------------------------------------------------------------------------
# set-cover search


@dataclass
class _Universe:
    """Reduced coloring-to-edge incidence used by the search."""

    proper: np.ndarray  # (N, m) bool: coloring j properly colors edge e
    colorings: np.ndarray  # (N, n) representative coloring per row
    rank: np.ndarray  # (N,) first profile rank sharing this edge set (symmetric mode)

    @classmethod
    def build(cls, G: Hypergraph, r: int, p: int, ranks: dict | None = None) -> "_Universe":
        arr = canonical_array(G.n, r)
        proper = distinct_color_counts(G.edge_array(), arr) >= p
        packed = np.packbits(proper, axis=1)
        keys = np.ascontiguousarray(packed).view(np.dtype((np.void, packed.shape[1]))).ravel()
        _, first, inverse = np.unique(keys, return_index=True, return_inverse=True)
        inverse = inverse.ravel()
        rank = np.zeros(len(first), dtype=np.int64)
        if ranks is not None:
            per_row = np.array([ranks[_profile(row)] for row in arr], dtype=np.int64)
            rank = np.full(len(first), np.iinfo(np.int64).max)
            np.minimum.at(rank, inverse, per_row)
        order = np.argsort(first, kind="stable")
        first, rank = first[order], rank[order]
        proper = proper[first]
        # drop empty and strictly dominated edge sets
        counts = proper.sum(axis=1)
        keep = []
        for j in np.argsort(-counts, kind="stable"):
            if counts[j] == 0:
                continue
            row = proper[j]
            if keep:
                kept = proper[keep]
                if np.any(np.all(kept | ~row, axis=1)):
                    continue
            keep.append(int(j))
        keep.sort()
        return cls(proper[keep], arr[first[keep]], rank[keep])


class _Search:
    def __init__(self, proper: np.ndarray, budget: int):
        self.proper = proper
        self.budget = budget
        self.nodes = 0

    def run(self, uncovered: np.ndarray, depth: int, allowed: np.ndarray) -> list[int] | None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded
        need = int(uncovered.sum())
        if need == 0:
            return []
        if depth == 0 or allowed.size == 0:
            return None
        sub = self.proper[np.ix_(allowed, uncovered)]
        cov = sub.sum(axis=1)
        useful = cov > 0
        allowed, sub, cov = allowed[useful], sub[useful], cov[useful]
        if allowed.size == 0:
            return None
        if depth == 1:
            hit = np.flatnonzero(cov == need)
            return [int(allowed[hit[0]])] if hit.size else None
        top = cov if cov.size <= depth else np.partition(cov, cov.size - depth)[-depth:]
        if top.sum() < need:
            return None
        per_edge = sub.sum(axis=0)
        e = int(np.argmin(per_edge))
        if per_edge[e] == 0:
            return None
        cands = np.flatnonzero(sub[:, e])
        cands = cands[np.argsort(-cov[cands], kind="stable")]
        live = np.ones(allowed.size, dtype=bool)
        edge_ids = np.flatnonzero(uncovered)
        for c in cands:
            live[c] = False
            nxt = uncovered.copy()
            nxt[edge_ids[sub[c]]] = False
            found = self.run(nxt, depth - 1, allowed[live])
            if found is not None:
                return [int(allowed[c])] + found
        return None


def _explore(args):
    proper, uncovered, depth, allowed, budget = args
    search = _Search(proper, budget)
    try:
        found = search.run(uncovered, depth, allowed)
    except BudgetExceeded:
        return "budget", search.nodes
    return found, search.nodes


def _greedy(proper: np.ndarray) -> list[int]:
    uncovered = np.ones(proper.shape[1], dtype=bool)
    chosen = []
    while uncovered.any():
        cov = proper[:, uncovered].sum(axis=1)
        j = int(np.argmax(cov))
        if cov[j] == 0:
            raise ValueError("some edge cannot be properly colored by any coloring")
        chosen.append(j)
        uncovered &= ~proper[j]
    return chosen


def _prune_redundant(proper: np.ndarray, chosen: list[int]) -> list[int]:
    chosen = list(chosen)
    for j in sorted(chosen, key=lambda j: proper[j].sum()):
        rest = [i for i in chosen if i != j]
        if rest and proper[rest].any(axis=0).all():
            chosen = rest
    return chosen


def _make_cover(colorings: np.ndarray, rows: Sequence[int], r: int) -> Cover:
    return Cover.from_array(colorings[list(rows)], r)


def exact_cover_number(G: Hypergraph, r: int, p: int, config: SearchConfig = SearchConfig()) -> ExactResult:
    """Smallest number of r-colorings properly (r, p) coloring every edge of ``G``."""
    p = CoverParams.for_k(G.k, r, p).p
    if G.m == 0:
        witness = Cover((Coloring((0,) * G.n, r),))
        return ExactResult(1, 1, witness, 0, (Bound("convention", 1, "edgeless hypergraph"),))

    symmetric = config.vertex_symmetry
    if symmetric is None:
        symmetric = G.is_complete()
    elif symmetric and not G.is_complete():
        raise ValueError("vertex symmetry is only sound for the complete hypergraph here")

    report = lower_bound_report(G, r, p, chromatic_budget=config.chromatic_budget)
    lower = report.lower

    reps: list[np.ndarray] = []
    ranks = None
    if symmetric:
        profiles = list(size_profiles(G.n, r))
        rep_rows = np.array([[c for c, s in enumerate(sz) for _ in range(s)] for sz in profiles], dtype=np.int64)
        rep_proper = distinct_color_counts(G.edge_array(), rep_rows) >= p
        order = sorted(range(len(profiles)), key=lambda i: (-int(rep_proper[i].sum()), i))
        ranks = {profiles[i]: pos for pos, i in enumerate(order)}
        reps = [(rep_rows[i], rep_proper[i]) for i in order]

    uni = _Universe.build(G, r, p, ranks)
    greedy = _prune_redundant(uni.proper, _greedy(uni.proper))
    best_rows = uni.colorings[greedy]
    upper = len(greedy)

    nodes = 0
    exhausted: list[int] = []
    x = lower
    while x < upper:
        if x > config.x_max:
            return ExactResult(x, upper, Cover.from_array(best_rows, r), nodes, report.bounds, tuple(exhausted))
        branches = []
        if symmetric:
            all_idx = np.arange(len(uni.proper))
            for pos, (row, rep_mask) in enumerate(reps):
                allowed = all_idx[uni.rank >= pos]
                branches.append(((row,), ~rep_mask, allowed))
        else:
            branches.append(((), np.ones(G.m, dtype=bool), np.arange(len(uni.proper))))
        depth_first = x - 1 if symmetric else x
        jobs = [(uni.proper, unc, depth_first, allowed, config.node_budget) for _, unc, allowed in branches]
        if config.parallel_width > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(config.parallel_width) as pool:
                outcomes = list(pool.map(_explore, jobs))
        else:
            outcomes = []
            for job in jobs:
                outcomes.append(_explore(job))
                if outcomes[-1][0] not in (None, "budget"):
                    break
        found_rows = None
        out_of_budget = False
        for (prefix, _, _), (res, used) in zip(branches, outcomes):
            nodes += used
            if res == "budget":
                out_of_budget = True
                continue
            if res is not None and found_rows is None:
                found_rows = list(prefix) + [uni.colorings[j] for j in res]
        if found_rows is not None:
            cover = Cover.from_array(np.array(found_rows), r)
            return ExactResult(x, x, cover, nodes, report.bounds, tuple(exhausted))
        if out_of_budget:
            return ExactResult(x, upper, Cover.from_array(best_rows, r), nodes, report.bounds, tuple(exhausted))
        exhausted.append(x)
        x += 1
    return ExactResult(upper, upper, Cover.from_array(best_rows, r), nodes, report.bounds, tuple(exhausted))


# ---------------------------------------------------------------------------
# p-strong chromatic number


def _strong_colorable(n: int, edges: Sequence[Sequence[int]], p: int, c: int, counter: list, budget: int) -> bool:
    incident: list[list[int]] = [[] for _ in range(n)]
    for i, e in enumerate(edges):
        for v in e:
            incident[v].append(i)
    order = sorted(range(n), key=lambda v: -len(incident[v]))
    need = [min(p, len(e)) for e in edges]
    colors = [-1] * n

    def ok(v):
        for i in incident[v]:
            seen = set()
            free = 0
            for u in edges[i]:
                if colors[u] < 0:
                    free += 1
                else:
                    seen.add(colors[u])
            if len(seen) + free < need[i]:
                return False
        return True

    def rec(pos, used):
        counter[0] += 1
        if counter[0] > budget:
            raise BudgetExceeded
        if pos == n:
            return True
        v = order[pos]
        for col in range(min(used + 1, c)):
            colors[v] = col
            if ok(v) and rec(pos + 1, max(used, col + 1)):
                return True
        colors[v] = -1
        return False

    return rec(0, 0)


def strong_chromatic_number(G: Hypergraph, p: int, node_budget: int = 1_000_000) -> int:
    """Fewest colors giving every edge at least ``min(p, k)`` distinct colors.

    For ``p >= k`` this is the chromatic number of the 2-section.
    """
    p = min(p, G.k)
    if p < 2:
        raise ValueError("p must be at least 2")
    if G.m == 0:
        return 1
    if p == G.k:
        graph = two_section(G)
        n, edges, need = G.n, list(graph.edges()), 2
    else:
        n, edges, need = G.n, list(G.edges), p
    counter = [0]
    for c in range(need, n + 1):
        if _strong_colorable(n, edges, need, c, counter, node_budget):
            return c
    return n


def ceil_log(value: int, base: int) -> int:
    """Smallest t >= 0 with ``base**t >= value``."""
    t, acc = 0, 1
    while acc < value:
        acc *= base
        t += 1
    return t


def lower_bound_report(G: Hypergraph, r: int, p: int, chromatic_budget: int = 200_000) -> BoundsReport:
    """Lower bounds on the cover number, each tagged with where it comes from.

    The bounds are not claimed tight.
    """
    p = CoverParams.for_k(G.k, r, p).p
    bounds = [Bound("trivial", 1, "a cover has at least one coloring")]
    if G.m:
        m, kind = best_m(G.n, G.k, r, p)
        bounds.append(Bound("edge_count", -(-G.m // m), f"ceil(|E|/M) with |E|={G.m}, M={m} ({kind})"))
        try:
            chi = strong_chromatic_number(G, p, chromatic_budget)
        except BudgetExceeded:
            chi = None
        if chi is not None:
            bounds.append(Bound("log_chromatic", ceil_log(chi, r), f"ceil(log_{r} chi) with chi={chi}"))
    return BoundsReport(max(b.value for b in bounds), tuple(bounds))
