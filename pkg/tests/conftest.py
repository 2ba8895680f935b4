from __future__ import annotations

import itertools
import random

import pytest

from corona_packing.graphs import Graph, UNREACHABLE, orient


def naive_exists_packing_k(dm, k: int) -> bool:
    """Brute-force oracle: try every coloring in {1..k}^V."""
    nv = dm.vertex_count
    for colors in itertools.product(range(1, k + 1), repeat=nv):
        ok = True
        for u in range(nv):
            for v in range(u + 1, nv):
                if colors[u] != colors[v]:
                    continue
                d = dm.values[u][v]
                if d is not UNREACHABLE and d <= colors[u]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def naive_count_packing_k(dm, k: int) -> int:
    nv = dm.vertex_count
    count = 0
    for colors in itertools.product(range(1, k + 1), repeat=nv):
        ok = True
        for u in range(nv):
            for v in range(u + 1, nv):
                if colors[u] != colors[v]:
                    continue
                d = dm.values[u][v]
                if d is not UNREACHABLE and d <= colors[u]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def random_graph(rng: random.Random, nv: int, density: float = 0.4) -> Graph:
    edges = set()
    for u in range(nv):
        for v in range(u + 1, nv):
            if rng.random() < density:
                edges.add((u, v))
    return Graph(nv, frozenset(edges))


def random_tree(rng: random.Random, nv: int) -> Graph:
    edges = frozenset((rng.randrange(v), v) for v in range(1, nv))
    return Graph(nv, edges)


def random_orientation(rng: random.Random, g: Graph):
    return orient(g, [rng.random() < 0.5 for _ in range(g.edge_count)])


@pytest.fixture
def rng():
    return random.Random(20240817)
