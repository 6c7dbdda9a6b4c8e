import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rpcover import fixture_path, k9_cover
from rpcover.core import Coloring, Cover, Hypergraph, complete_hypergraph, random_hypergraph
from rpcover.formats import (
    FormatError,
    cover_from_json,
    cover_to_json,
    format_cover,
    format_hypergraph,
    hypergraph_from_json,
    hypergraph_to_json,
    parse_cover,
    parse_hypergraph,
    read_cover,
    read_hypergraph,
    write_cover,
    write_hypergraph,
)


@given(st.integers(3, 10), st.integers(2, 4), st.integers(0, 1000), st.data())
def test_hypergraph_text_and_json_round_trip(n, k, seed, data):
    from math import comb

    k = min(k, n)
    G = random_hypergraph(n, k, data.draw(st.integers(0, min(30, comb(n, k)))), seed)
    assert parse_hypergraph(format_hypergraph(G)) == G
    assert hypergraph_from_json(json.loads(json.dumps(hypergraph_to_json(G)))) == G


@given(st.integers(1, 8), st.integers(1, 5), st.data())
def test_cover_round_trip(n, r, data):
    rows = data.draw(st.lists(st.lists(st.integers(0, r - 1), min_size=n, max_size=n), min_size=1, max_size=5))
    cover = Cover(tuple(Coloring(tuple(row), r) for row in rows))
    assert parse_cover(format_cover(cover)) == cover
    assert cover_from_json(cover_to_json(cover)) == cover


def test_file_round_trip(tmp_path):
    G = complete_hypergraph(6, 3)
    for name in ("g.txt", "g.json"):
        write_hypergraph(G, tmp_path / name)
        assert read_hypergraph(tmp_path / name) == G
    cover = k9_cover()
    for name in ("c.cover", "c.json"):
        write_cover(cover, tmp_path / name)
        assert read_cover(tmp_path / name) == cover


def test_comments_and_blank_lines():
    text = "# header comment\n4 3 2\n\n0 1 2  # first\n1 2 3\n"
    assert parse_hypergraph(text) == Hypergraph(4, 3, ((0, 1, 2), (1, 2, 3)))


@pytest.mark.parametrize(
    "text",
    ["", "4 3\n", "4 3 2\n0 1 2\n", "4 3 1\n0 1 x\n", "4 3 1\n0 1 7\n", "4 3 1\n0 1\n"],
)
def test_bad_hypergraph_text(text):
    with pytest.raises(FormatError):
        parse_hypergraph(text)


@pytest.mark.parametrize("text", ["3 2 1\n0 1\n", "3 2 1\n0 1 2\n", "3 2 2\n0 1 0\n", "3 2 1\n0 1 5\n"])
def test_bad_cover_text(text):
    with pytest.raises(FormatError):
        parse_cover(text)


def test_bad_json(tmp_path):
    (tmp_path / "g.json").write_text("{not json")
    with pytest.raises(FormatError):
        read_hypergraph(tmp_path / "g.json")
    with pytest.raises(FormatError):
        hypergraph_from_json({"n": 4})
    with pytest.raises(FormatError):
        cover_from_json({"n": 3, "r": 2, "colorings": [[0, 1]]})


def test_fixture_ships_with_package():
    cover = read_cover(fixture_path())
    assert (cover.n, cover.r, len(cover)) == (9, 3, 4)
    assert cover.colorings[0].colors == (0, 0, 0, 1, 1, 1, 2, 2, 2)
