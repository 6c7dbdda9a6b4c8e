"""Hypergraphs, colorings, covers and the properness predicate.

Vertices are the integers ``0..n-1``. Every edge is stored as a strictly
increasing tuple; duplicate edges are dropped on construction. All types are
frozen and safe to share between workers.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import networkx as nx
import numpy as np

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    n: int
    k: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")
        if self.n < self.k:
            raise ValueError(f"need n >= k, got n={self.n}, k={self.k}")
        seen: dict[Edge, None] = {}
        for e in self.edges:
            edge = tuple(sorted(int(v) for v in e))
            if len(edge) != self.k or len(set(edge)) != self.k:
                raise ValueError(f"edge {tuple(e)} does not have {self.k} distinct vertices")
            if edge[0] < 0 or edge[-1] >= self.n:
                raise ValueError(f"edge {edge} has a vertex outside [0, {self.n})")
            seen.setdefault(edge, None)
        object.__setattr__(self, "edges", tuple(seen))

    @property
    def m(self) -> int:
        return len(self.edges)

    def is_complete(self) -> bool:
        return self.m == math.comb(self.n, self.k)

    def edge_array(self) -> np.ndarray:
        """Edges as an ``(m, k)`` integer array."""
        return np.array(self.edges, dtype=np.int64).reshape(self.m, self.k)


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    r: int

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        if self.r < 1:
            raise ValueError(f"r must be positive, got {self.r}")
        for c in colors:
            if not 0 <= c < self.r:
                raise ValueError(f"color {c} outside [0, {self.r})")
        object.__setattr__(self, "colors", colors)

    @property
    def n(self) -> int:
        return len(self.colors)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.r)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out

    def class_sizes(self) -> list[int]:
        sizes = [0] * self.r
        for c in self.colors:
            sizes[c] += 1
        return sizes


@dataclass(frozen=True)
class Cover:
    colorings: tuple[Coloring, ...]

    def __post_init__(self):
        colorings = tuple(self.colorings)
        if not colorings:
            raise ValueError("a cover needs at least one coloring")
        n, r = colorings[0].n, colorings[0].r
        for c in colorings:
            if c.n != n or c.r != r:
                raise ValueError("all colorings of a cover must share n and r")
        object.__setattr__(self, "colorings", colorings)

    @property
    def n(self) -> int:
        return self.colorings[0].n

    @property
    def r(self) -> int:
        return self.colorings[0].r

    def __len__(self) -> int:
        return len(self.colorings)

    def __iter__(self) -> Iterator[Coloring]:
        return iter(self.colorings)

    def as_array(self) -> np.ndarray:
        """Colors as an ``(x, n)`` array, one row per coloring."""
        return np.array([c.colors for c in self.colorings], dtype=np.int64).reshape(len(self), self.n)

    @classmethod
    def from_array(cls, arr, r: int) -> "Cover":
        return cls(tuple(Coloring(tuple(row), r) for row in np.asarray(arr).tolist()))


@dataclass(frozen=True)
class CoverParams:
    r: int
    p: int

    def __post_init__(self):
        if self.p < 2:
            raise ValueError(f"p must be at least 2, got {self.p}")
        if self.p > self.r:
            raise ValueError(f"p={self.p} exceeds r={self.r}: no edge of size >= p can be properly colored")

    @classmethod
    def for_k(cls, k: int, r: int, p: int) -> "CoverParams":
        """Clamp ``p`` to ``min(p, k)`` and validate ``2 <= p <= r``."""
        return cls(r, min(p, k))


def effective_p(k: int, r: int, p: int) -> int:
    return CoverParams.for_k(k, r, p).p


def properly_colored(edge: Sequence[int], coloring: Coloring | Sequence[int], p: int) -> bool:
    """True when the edge sees at least ``min(p, |edge|)`` distinct colors."""
    colors = coloring.colors if isinstance(coloring, Coloring) else coloring
    return len({colors[v] for v in edge}) >= min(p, len(edge))


# popcount of the OR of one-hot color bits gives the number of distinct colors
def distinct_color_counts(edges: np.ndarray, colors: np.ndarray) -> np.ndarray:
    """Distinct colors per edge for each coloring.

    ``edges`` is ``(m, k)``, ``colors`` is ``(n,)`` or ``(x, n)``; the result has
    shape ``(m,)`` or ``(x, m)``.
    """
    colors = np.asarray(colors)
    if colors.size and colors.max() >= 63:
        raise ValueError("bit-packed color counting supports at most 63 colors")
    bits = np.left_shift(np.uint64(1), colors.astype(np.uint64))
    gathered = bits[..., edges]  # (..., m, k)
    return np.bitwise_count(np.bitwise_or.reduce(gathered, axis=-1)).astype(np.int64)


# rough cap on gathered entries per chunk in uncovered_indices
_CHUNK_ENTRIES = 2_000_000


def uncovered_indices(edges: np.ndarray, rows: np.ndarray, need: int) -> np.ndarray:
    """Indices of ``edges`` with fewer than ``need`` colors under every row.

    Rows are applied in the given order, a chunk at a time, dropping covered
    edges as they go; putting strong colorings first keeps it fast.
    """
    remaining = np.arange(len(edges))
    rows = np.asarray(rows)
    if rows.ndim == 1:
        rows = rows[None, :]
    j = 0
    k = edges.shape[1] if edges.ndim == 2 else 1
    while remaining.size and j < len(rows):
        b = max(1, min(len(rows) - j, _CHUNK_ENTRIES // max(1, remaining.size * k)))
        counts = distinct_color_counts(edges[remaining], rows[j:j + b])
        remaining = remaining[~(counts >= need).any(axis=0)]
        j += b
    return remaining


def uncovered_edges(G: Hypergraph, cover: Cover, p: int) -> list[Edge]:
    """Edges not properly ``(r, p)`` colored by any coloring of the cover."""
    if cover.n != G.n:
        raise ValueError(f"cover is over {cover.n} vertices but the hypergraph has {G.n}")
    if G.m == 0:
        return []
    left = uncovered_indices(G.edge_array(), cover.as_array(), min(p, G.k))
    return [G.edges[i] for i in left.tolist()]


def is_cover(G: Hypergraph, cover: Cover, p: int) -> bool:
    return not uncovered_edges(G, cover, p)


def complete_hypergraph(n: int, k: int) -> Hypergraph:
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    return Hypergraph(n, k, tuple(itertools.combinations(range(n), k)))


def dependency(G: Hypergraph) -> int:
    """Largest number of other edges meeting a single edge."""
    if G.m <= 1:
        return 0
    incident: list[list[int]] = [[] for _ in range(G.n)]
    for i, e in enumerate(G.edges):
        for v in e:
            incident[v].append(i)
    best = 0
    for i, e in enumerate(G.edges):
        nbrs = set()
        for v in e:
            nbrs.update(incident[v])
        best = max(best, len(nbrs) - 1)
    return best


def shrink(G: Hypergraph, vertex: int | None = None) -> Hypergraph:
    """Delete a vertex and drop the uniformity by one.

    Edges through the deleted vertex lose it; every other edge is replaced by
    all of its (k-1)-subsets. Remaining vertices are renumbered to close the gap.
    The deleted vertex defaults to the highest index.
    """
    if G.k < 3:
        raise ValueError("shrink needs k >= 3 so the result stays at least 2-uniform")
    v = G.n - 1 if vertex is None else vertex
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} outside [0, {G.n})")

    def relabel(e):
        return tuple(u - 1 if u > v else u for u in e)

    new_edges: list[Edge] = []
    for e in G.edges:
        if v in e:
            new_edges.append(relabel(u for u in e if u != v))
        else:
            new_edges.extend(relabel(s) for s in itertools.combinations(e, G.k - 1))
    return Hypergraph(G.n - 1, G.k - 1, tuple(new_edges))


def two_section(G: Hypergraph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(G.n))
    for e in G.edges:
        graph.add_edges_from(itertools.combinations(e, 2))
    return graph


def unrank_combination(rank: int, n: int, k: int) -> Edge:
    """The ``rank``-th k-subset of ``range(n)`` in lexicographic order."""
    out = []
    x = 0
    for slot in range(k, 0, -1):
        while True:
            c = math.comb(n - x - 1, slot - 1)
            if rank < c:
                break
            rank -= c
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def random_hypergraph(n: int, k: int, m: int, seed: int = 0) -> Hypergraph:
    """``m`` distinct k-subsets drawn uniformly without replacement."""
    total = math.comb(n, k)
    if m > total:
        raise ValueError(f"cannot draw {m} distinct edges from C({n},{k})={total}")
    rng = np.random.default_rng(seed)
    if total <= 1 << 62:
        ranks = rng.choice(total, size=m, replace=False) if m else []
        edges = [unrank_combination(int(i), n, k) for i in ranks]
    else:  # pragma: no cover - astronomically large universes
        picked: dict[Edge, None] = {}
        while len(picked) < m:
            picked.setdefault(tuple(sorted(rng.choice(n, size=k, replace=False).tolist())), None)
        edges = list(picked)
    return Hypergraph(n, k, tuple(edges))


def perfect_matching(t: int, k: int, n: int | None = None) -> Hypergraph:
    """``t`` pairwise disjoint edges on consecutive vertices."""
    n = t * k if n is None else n
    return Hypergraph(n, k, tuple(tuple(range(i * k, (i + 1) * k)) for i in range(t)))


def relabel_colors(coloring: Coloring, perm: Sequence[int]) -> Coloring:
    return Coloring(tuple(perm[c] for c in coloring.colors), coloring.r)


def cover_from_rows(rows: Iterable[Sequence[int]], r: int) -> Cover:
    return Cover(tuple(Coloring(tuple(row), r) for row in rows))
