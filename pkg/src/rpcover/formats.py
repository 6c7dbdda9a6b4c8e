"""Text and JSON readers/writers for hypergraphs and covers.

Hypergraph text: header ``n k m`` then ``m`` lines of ``k`` vertex indices.
Cover text: header ``n r x`` then ``x`` lines of ``n`` colors.
Blank lines and ``#`` comments are ignored. JSON mirrors use the fields
``{n, k, edges}`` and ``{n, r, colorings}``.
"""
from __future__ import annotations

import json
from pathlib import Path

from .core import Coloring, Cover, Hypergraph


class FormatError(ValueError):
    pass


def _rows(text: str) -> list[list[int]]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise FormatError(f"line {lineno}: non-integer token in {raw!r}") from exc
    return rows


def parse_hypergraph(text: str) -> Hypergraph:
    rows = _rows(text)
    if not rows or len(rows[0]) != 3:
        raise FormatError("hypergraph header must be 'n k m'")
    n, k, m = rows[0]
    body = rows[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}")
    try:
        return Hypergraph(n, k, tuple(tuple(e) for e in body))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_hypergraph(G: Hypergraph) -> str:
    lines = [f"{G.n} {G.k} {G.m}"]
    lines += [" ".join(map(str, e)) for e in G.edges]
    return "\n".join(lines) + "\n"


def parse_cover(text: str) -> Cover:
    rows = _rows(text)
    if not rows or len(rows[0]) != 3:
        raise FormatError("cover header must be 'n r x'")
    n, r, x = rows[0]
    body = rows[1:]
    if len(body) != x:
        raise FormatError(f"header announces {x} colorings, found {len(body)}")
    for i, row in enumerate(body):
        if len(row) != n:
            raise FormatError(f"coloring {i} has {len(row)} entries, expected {n}")
    try:
        return Cover(tuple(Coloring(tuple(row), r) for row in body))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_cover(cover: Cover) -> str:
    lines = [f"{cover.n} {cover.r} {len(cover)}"]
    lines += [" ".join(map(str, c.colors)) for c in cover]
    return "\n".join(lines) + "\n"


def hypergraph_to_json(G: Hypergraph) -> dict:
    return {"n": G.n, "k": G.k, "edges": [list(e) for e in G.edges]}


def hypergraph_from_json(obj: dict) -> Hypergraph:
    try:
        return Hypergraph(int(obj["n"]), int(obj["k"]), tuple(tuple(e) for e in obj["edges"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad hypergraph JSON: {exc}") from exc


def cover_to_json(cover: Cover) -> dict:
    return {"n": cover.n, "r": cover.r, "colorings": [list(c.colors) for c in cover]}


def cover_from_json(obj: dict) -> Cover:
    try:
        n, r = int(obj["n"]), int(obj["r"])
        rows = [list(row) for row in obj["colorings"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad cover JSON: {exc}") from exc
    if any(len(row) != n for row in rows):
        raise FormatError(f"every coloring must have {n} entries")
    try:
        return Cover(tuple(Coloring(tuple(row), r) for row in rows))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def _is_json(path: Path, text: str) -> bool:
    return path.suffix.lower() == ".json" or text.lstrip().startswith("{")


def read_hypergraph(path) -> Hypergraph:
    path = Path(path)
    text = path.read_text()
    if _is_json(path, text):
        try:
            return hypergraph_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: {exc}") from exc
    return parse_hypergraph(text)


def read_cover(path) -> Cover:
    path = Path(path)
    text = path.read_text()
    if _is_json(path, text):
        try:
            return cover_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: {exc}") from exc
    return parse_cover(text)


def write_hypergraph(G: Hypergraph, path) -> None:
    path = Path(path)
    if path.suffix.lower() == ".json":
        path.write_text(json.dumps(hypergraph_to_json(G)) + "\n")
    else:
        path.write_text(format_hypergraph(G))


def write_cover(cover: Cover, path) -> None:
    path = Path(path)
    if path.suffix.lower() == ".json":
        path.write_text(json.dumps(cover_to_json(cover)) + "\n")
    else:
        path.write_text(format_cover(cover))
