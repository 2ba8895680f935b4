from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph, random_orientation
from corona_packing.graphs import (
    UNREACHABLE,
    CoronaLayout,
    Graph,
    GraphError,
    corona,
    cycle,
    distances,
    enumerate_orientations,
    find_corona_conflict,
    generalized_corona,
    orient,
    path,
    sources_and_sinks,
    weak_directed_distances,
)
from corona_packing.solver import is_packing_coloring


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


def test_path_basics():
    assert path(1).vertex_count == 1 and path(1).edge_count == 0
    assert path(2).edge_count == 1
    g = path(4)
    assert g.vertex_count == 4 and g.edge_count == 3
    with pytest.raises(GraphError):
        path(0)


def test_cycle_basics():
    assert cycle(3).edge_count == 3
    assert cycle(5).edge_count == 5
    dm = distances(cycle(4))
    assert max(d for row in dm.values for d in row) == 2
    with pytest.raises(GraphError):
        cycle(2)


def test_no_loops_and_range_checks():
    with pytest.raises(GraphError):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(GraphError):
        Graph(3, frozenset({(0, 3)}))


def test_orientation_rejects_opposite_and_foreign_arcs():
    from corona_packing.graphs import OrientedGraph
    g = path(3)
    with pytest.raises(GraphError):
        OrientedGraph(g, ((0, 1), (1, 0)))
    with pytest.raises(GraphError):
        OrientedGraph(g, ((0, 2), (1, 2)))
    with pytest.raises(GraphError):
        OrientedGraph(g, ((0, 1),))


def test_corona_shapes():
    g = generalized_corona(cycle(3), 3)
    assert g.vertex_count == 12 and g.edge_count == 12
    assert g.layout == CoronaLayout("cycle", 3, 3)
    h = generalized_corona(path(2), 1)
    assert nx.is_isomorphic(to_nx(h), to_nx(path(4)))
    assert nx.is_isomorphic(to_nx(generalized_corona(path(1), 1)), to_nx(path(2)))
    # every pendant has degree exactly one
    layout = g.layout
    for i in range(3):
        for j in range(3):
            assert g.degree(layout.pendant(i, j)) == 1


def test_corona_identity_p0():
    g = path(5)
    assert generalized_corona(g, 0) is g


def test_layout_roundtrip():
    layout = CoronaLayout("cycle", 7, 4)
    for i in range(7):
        for j in range(4):
            assert layout.pendant_owner(layout.pendant(i, j)) == i
    assert layout.vertex_count == 7 * 5


def test_distance_examples():
    assert distances(path(4)).value(0, 3) == 3
    assert distances(cycle(6)).value(0, 3) == 3
    g = corona("path", 2, 1)
    assert distances(g).value(2, 3) == 3  # pendant-spine-spine-pendant


def test_distances_unreachable_and_symmetric():
    g = Graph(4, frozenset({(0, 1), (2, 3)}))
    dm = distances(g)
    assert dm.value(1, 2) is UNREACHABLE
    for u in range(4):
        assert dm.value(u, u) == 0
        for v in range(4):
            assert dm.value(u, v) == dm.value(v, u)


@pytest.mark.parametrize("family,n,p", [
    ("path", 1, 0), ("path", 6, 0), ("cycle", 3, 0), ("cycle", 8, 0),
    ("path", 5, 2), ("cycle", 5, 3), ("path", 9, 1), ("cycle", 4, 4),
])
def test_layout_formula_matches_bfs(family, n, p):
    base = path(n) if family == "path" else cycle(n)
    g = generalized_corona(base, p) if p else base
    layout = g.layout
    dm = distances(g)
    for u in range(g.vertex_count):
        for v in range(g.vertex_count):
            assert layout.distance(u, v) == dm.value(u, v)


def test_orient_examples():
    og = orient(path(3), [False, False])
    assert og.arcs == ((0, 1), (1, 2))
    og = orient(path(3), [False, True])
    sources, sinks = sources_and_sinks(og)
    assert sinks == {1} and sources == {0, 2}
    with pytest.raises(GraphError):
        orient(path(3), [False])


def test_directed_cycle_orientation():
    g = cycle(4)
    # canonical edges (0,1),(0,3),(1,2),(2,3): flip (0,3) and (2,3)
    og = orient(g, [False, True, False, False])
    sources, sinks = sources_and_sinks(og)
    assert not sources and not sinks
    dm = weak_directed_distances(og)
    assert dm.value(0, 2) == 2


def test_weak_distance_examples():
    og = orient(path(3), [False, False])
    assert weak_directed_distances(og).value(0, 2) == 2
    og = orient(path(3), [False, True])  # 0 -> 1 <- 2
    assert weak_directed_distances(og).value(0, 2) is UNREACHABLE


def test_sources_sinks_isolated_vertex():
    g = Graph(2, frozenset())
    og = orient(g, [])
    sources, sinks = sources_and_sinks(og)
    assert sources == {0, 1} and sinks == {0, 1}
    alt = orient(cycle(4), [False, False, True, False])
    sources, sinks = sources_and_sinks(alt)
    assert sources == {0, 2} and sinks == {1, 3}


def test_sources_sinks_restrict():
    og = orient(path(3), [False, True])
    sources, sinks = sources_and_sinks(og, restrict={0, 1})
    assert sources == {0} and sinks == {1}


def test_enumerate_orientations():
    assert sum(1 for _ in enumerate_orientations(path(2))) == 2
    seen = {og.arcs for og in enumerate_orientations(cycle(3))}
    assert len(seen) == 8
    assert sum(1 for _ in enumerate_orientations(path(1))) == 1
    stream = enumerate_orientations(path(3))
    assert next(stream).arcs == ((0, 1), (1, 2))
    assert next(stream).arcs == ((1, 0), (1, 2))  # bit 0 flips edge 0
    with pytest.raises(GraphError):
        next(enumerate_orientations(corona("cycle", 13, 1)))


def test_undirected_triangle_inequality(rng):
    g = random_graph(rng, 9, 0.3)
    dm = distances(g)
    for u in range(9):
        for v in range(9):
            for w in range(9):
                duv, duw, dwv = dm.value(u, v), dm.value(u, w), dm.value(w, v)
                if duw is not UNREACHABLE and dwv is not UNREACHABLE:
                    assert duv is not UNREACHABLE and duv <= duw + dwv


def test_weak_metric_may_break_triangle_inequality():
    # two arcs into a shared head plus a long detour: legs of length one,
    # direct weak distance ten
    arcs = {(0, 1), (2, 1)} | {(i, i + 1) for i in range(2, 11)} | {(11, 0)}
    dirs = [(v, u) in arcs for (u, v) in cycle(12).canonical_edges()]
    dm = weak_directed_distances(orient(cycle(12), dirs))
    assert dm.value(0, 1) == 1 and dm.value(1, 2) == 1
    assert dm.value(0, 2) == 10


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 8), st.data())
def test_weak_distance_at_least_undirected(nv, data):
    import random
    g = random_graph(random.Random(data.draw(st.integers(0, 10**6))), nv)
    og = random_orientation(random.Random(data.draw(st.integers(0, 10**6))), g)
    und = distances(g)
    weak = weak_directed_distances(og)
    for u in range(nv):
        assert weak.value(u, u) == 0
        for v in range(nv):
            assert weak.value(u, v) == weak.value(v, u)
            if weak.value(u, v) is not UNREACHABLE:
                assert und.value(u, v) is not UNREACHABLE
                assert weak.value(u, v) >= und.value(u, v)


def test_corona_conflict_matches_checker(rng):
    for _ in range(60):
        family = rng.choice(["path", "cycle"])
        n = rng.randint(3 if family == "cycle" else 1, 9)
        p = rng.randint(0, 3)
        base = path(n) if family == "path" else cycle(n)
        g = generalized_corona(base, p) if p else base
        colors = tuple(rng.randint(1, 6) for _ in range(g.vertex_count))
        fast = find_corona_conflict(g.layout, colors)
        slow = is_packing_coloring(distances(g), colors)
        assert (fast is None) == slow
        if fast is not None:
            u, v, d = fast
            assert colors[u] == colors[v] and d <= colors[u]
            assert g.layout.distance(u, v) == d
