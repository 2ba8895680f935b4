from __future__ import annotations

import pytest

from corona_packing.graphs import OrientedGraph, corona, orient, path
from corona_packing.textio import (
    TextFormatError,
    format_coloring,
    format_graph,
    parse_coloring,
    parse_graph,
    to_dot,
)


def test_graph_roundtrip_undirected():
    g = corona("cycle", 4, 2)
    text = format_graph(g)
    back = parse_graph(text)
    assert back.vertex_count == g.vertex_count
    assert back.edges == g.edges


def test_graph_roundtrip_oriented():
    og = orient(path(4), [False, True, False])
    text = format_graph(og)
    back = parse_graph(text)
    assert isinstance(back, OrientedGraph)
    assert back.arc_set() == og.arc_set()


def test_comments_and_blank_lines():
    text = "# a graph\n\ng 2 1 undirected\n# the edge\ne 0 1\n"
    assert parse_graph(text).edge_count == 1


@pytest.mark.parametrize("text", [
    "",
    "g 2 1\ne 0 1",
    "g 2 1 weird\ne 0 1",
    "g 2 2 undirected\ne 0 1",
    "g 2 1 undirected\ne 0 2",
    "g 2 1 undirected\na 0 1",
    "g 3 2 oriented\na 0 1\na 1 0",
    "g two 1 undirected\ne 0 1",
])
def test_parse_graph_errors(text):
    with pytest.raises(TextFormatError):
        parse_graph(text)


def test_coloring_roundtrip():
    colors = (1, 4, 2, 1)
    assert parse_coloring(format_coloring(colors), 4) == colors


@pytest.mark.parametrize("text,n", [
    ("v 0 1\n", 2),
    ("v 0 1\nv 0 2\n", 1),
    ("v 0 0\n", 1),
    ("w 0 1\n", 1),
    ("v 5 1\n", 2),
])
def test_parse_coloring_errors(text, n):
    with pytest.raises(TextFormatError):
        parse_coloring(text, n)


def test_to_dot():
    g = corona("path", 3, 1)
    dot = to_dot(g, (1, 2, 1, 3, 1, 2))
    assert dot.startswith("graph g {")
    assert dot.count(" -- ") == g.edge_count
    assert '0 [label="0:1"];' in dot
    og = orient(path(3), [False, False])
    directed = to_dot(og)
    assert directed.startswith("digraph g {")
    assert " -> " in directed and '[label="0"]' in directed
