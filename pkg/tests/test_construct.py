import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rpcover.construct import (
    balanced_coloring,
    base_case_sizes,
    complete_uncovered,
    cover_general,
    cover_general_array,
    knk33_cover,
    knk43_cover,
    round_schedule,
    schedule_length,
    single_coloring_capacity,
    size_bound,
    smallest_offset,
)
from rpcover.core import complete_hypergraph, uncovered_edges
from rpcover.counting import size_profiles
from rpcover.exact import exact_cover_number

GRID_RP = [(3, 3), (4, 3), (5, 3), (4, 4), (5, 4)]


@pytest.mark.parametrize("m,r,sizes", [(9, 3, [3, 3, 3]), (7, 3, [3, 2, 2]), (2, 3, [1, 1, 0])])
def test_balanced_coloring_examples(m, r, sizes):
    assert balanced_coloring(m, r).class_sizes() == sizes
    assert balanced_coloring(list(range(10, 10 + m)), r).class_sizes() == sizes


def test_balanced_coloring_rejects_empty():
    with pytest.raises(ValueError):
        balanced_coloring([], 3)


def check_schedule(r, q, sched):
    subsets = list(itertools.combinations(range(r), q))
    placed = [s for g in sched.groups for s in g]
    assert sorted(placed) == subsets
    for g in sched.groups:
        classes = [c for s in g for c in s]
        assert len(classes) == len(set(classes))
    assert sched.size == schedule_length(r, q) == -(-math.comb(r, q) // (r // q))


@pytest.mark.parametrize("r,p", [(r, p) for r in range(2, 9) for p in range(2, r + 1)])
def test_round_schedule_invariants(r, p):
    check_schedule(r, p - 1, round_schedule(r, p))


def test_round_schedule_examples():
    s43 = round_schedule(4, 3)
    assert s43.size == 3
    assert all(len(g) == 2 for g in s43.groups)
    assert round_schedule(3, 3).size == 3
    assert all(len(g) == 1 for g in round_schedule(3, 3).groups)
    s53 = round_schedule(5, 3)
    assert s53.size == 5 and all(len(g) == 2 for g in s53.groups)


@pytest.mark.parametrize("k,p", [(k, p) for k in range(2, 9) for p in range(2, k + 1)])
def test_smallest_offset(k, p):
    l = smallest_offset(k, p)
    assert 0 <= l <= p - 2 and (k - 1 - l) % (p - 1) == 0
    assert all((k - 1 - j) % (p - 1) for j in range(l))


@pytest.mark.parametrize("k,r,p", [(k, r, p) for k in range(2, 8) for r in range(2, 7) for p in range(2, min(r, k) + 1)])
def test_base_case_sizes_are_sound_and_maximal(k, r, p):
    cap = single_coloring_capacity(k, r, p)
    for m in range(1, cap + 1):
        sizes = base_case_sizes(m, k, r, p)
        assert sum(sizes) == m and len(sizes) == r
        # any p-1 classes together hold fewer than k vertices
        assert sum(sorted(sizes, reverse=True)[: p - 1]) < k
    # with one more vertex, every size profile has p-1 classes holding k vertices
    assert all(sum(prof[: p - 1]) >= k for prof in size_profiles(cap + 1, r))


def test_base_case_rejects_too_many():
    with pytest.raises(ValueError):
        base_case_sizes(single_coloring_capacity(3, 3, 3) + 1, 3, 3, 3)


def test_even_k_rainbow_base_case_shape():
    # k=4, (3,3): at most (3(k-1)-1)/2 = 4 vertices, classes (k/2, (k-2)/2, (k-2)/2)
    assert single_coloring_capacity(4, 3, 3) == 4
    assert sorted(base_case_sizes(4, 4, 3, 3), reverse=True) == [2, 1, 1]
    assert single_coloring_capacity(6, 3, 3) == 7
    assert sorted(base_case_sizes(7, 6, 3, 3), reverse=True) == [3, 2, 2]


def test_cover_general_examples():
    assert len(cover_general(3, 3, 3, 3)) == 1
    six = cover_general(6, 5, 3, 3)
    assert len(six) == 1 and six.colorings[0].class_sizes() == [2, 2, 2]
    assert len(cover_general(4, 3, 3, 3)) == 3
    assert knk33_cover(9, 3) == cover_general(9, 3, 3, 3)
    assert knk43_cover(9, 3) == cover_general(9, 3, 4, 3)


def test_cover_general_on_explicit_vertices():
    cover = cover_general([5, 7, 9, 11, 13, 15], 3, 3, 3)
    assert cover.n == 6
    assert uncovered_edges(complete_hypergraph(6, 3), cover, 3) == []


def test_cover_general_rejects_bad_input():
    with pytest.raises(ValueError):
        cover_general_array(2, 3, 3, 3)
    with pytest.raises(ValueError):
        cover_general_array(10, 4, 3, 4)


def test_cover_has_no_repeated_colorings():
    rows = cover_general_array(30, 4, 4, 4)
    assert len(np.unique(rows, axis=0)) == len(rows)


@given(st.integers(3, 14), st.sampled_from(GRID_RP + [(6, 3), (6, 4), (5, 5)]), st.integers(3, 5))
def test_cover_general_verifies_against_plain_check(n, rp, k):
    r, p = rp
    if n < k:
        return
    cover = cover_general(n, k, r, p)
    G = complete_hypergraph(n, k)
    assert uncovered_edges(G, cover, p) == []
    assert len(complete_uncovered(n, k, cover.as_array(), p)) == 0


def test_complete_uncovered_finds_gaps():
    rows = np.array([[0, 0, 0, 1, 1, 1, 2, 2, 2]])
    missing = complete_uncovered(9, 3, rows, 3)
    assert len(missing) == 84 - 27
    with pytest.raises(ValueError):
        complete_uncovered(8, 3, rows, 3)


@pytest.mark.parametrize("n,k,r,p", [(n, k, r, p) for n in range(4, 8) for k in (3, 4) if k <= n
                                     for r, p in [(3, 3), (4, 3), (4, 4), (5, 4)]])
def test_cover_general_not_below_exact(n, k, r, p):
    assert len(cover_general(n, k, r, p)) >= exact_cover_number(complete_hypergraph(n, k), r, p).value


def test_size_bound_examples():
    b = size_bound(9, 3, 3, 3)
    assert b.value == pytest.approx((9 / 2) ** math.log(3, 1.5) / 3 + math.log(9 / 2, 1.5) - 1)
    assert b.value == pytest.approx(22.33, abs=0.01)
    assert b.formula_id == "knk33" and b.l == 0
    b = size_bound(16, 3, 4, 3)
    assert b.formula_id == "knk43"
    assert b.value == pytest.approx(8 ** math.log2(3) / 3 + 3 - 1)
    tiny = size_bound(3, 3, 5, 3)
    assert tiny.raw < 1 and tiny.value == 1
    assert size_bound(20, 5, 5, 4).formula_id == "general"


@pytest.mark.parametrize("k,p", [(3, 3), (4, 3), (4, 4), (5, 4), (6, 4)])
def test_size_bound_offset_rule(k, p):
    b = size_bound(30, k, p + 1, p)
    assert 0 <= b.l <= p - 2 and (k - 1 - b.l) % (p - 1) == 0


def test_size_growth_in_r_is_measured():
    # recorded, not asserted: the construction need not shrink as r grows
    rows = {}
    for p in (3, 4):
        for k in (4, 5):
            rows[(p, k)] = [len(cover_general_array(24, k, r, p)) for r in range(p, 2 * p + 1)]
    assert all(all(v >= 1 for v in sizes) for sizes in rows.values())
