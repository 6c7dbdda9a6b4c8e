"""Strong (r, p) covers of uniform hypergraphs: exact search, constructions, bounds."""
from importlib import resources

from .core import (
    Coloring,
    Cover,
    CoverParams,
    Hypergraph,
    complete_hypergraph,
    dependency,
    is_cover,
    properly_colored,
    random_hypergraph,
    shrink,
    two_section,
    uncovered_edges,
)

__all__ = [
    "Coloring",
    "Cover",
    "CoverParams",
    "Hypergraph",
    "complete_hypergraph",
    "dependency",
    "is_cover",
    "properly_colored",
    "random_hypergraph",
    "shrink",
    "two_section",
    "uncovered_edges",
    "fixture_path",
    "k9_cover",
]


def fixture_path(name: str = "k9_c11.cover"):
    """Path to a cover file shipped with the package."""
    return resources.files(__name__).joinpath("data", name)


def k9_cover() -> Cover:
    """Four 3-colorings forming a strong (3, 3) cover of the complete 3-uniform hypergraph on 9 vertices."""
    from .formats import parse_cover

    return parse_cover(fixture_path().read_text())
