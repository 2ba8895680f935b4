"""Core graph types: coronae of paths and cycles, orientations, distances.

Vertices are integers 0..n-1.  A generalized corona keeps its spine first
(indices 0..n-1) and appends pendants in blocks of p per spine vertex, so
pendant j of spine vertex i has index n + i*p + j.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional

Coloring = tuple[int, ...]

UNREACHABLE = None  # explicit sentinel; never a large stand-in number


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class CoronaLayout:
    """Index bookkeeping for P_n/C_n with p pendants per spine vertex."""

    family: str  # "path" or "cycle"
    n: int
    p: int

    def __post_init__(self):
        if self.family not in ("path", "cycle"):
            raise GraphError(f"unknown family {self.family!r}")
        if self.family == "path" and self.n < 1:
            raise GraphError("path needs n >= 1")
        if self.family == "cycle" and self.n < 3:
            raise GraphError("cycle needs n >= 3")
        if self.p < 0:
            raise GraphError("p must be >= 0")

    @property
    def vertex_count(self) -> int:
        return self.n * (1 + self.p)

    def is_spine(self, v: int) -> bool:
        return v < self.n

    def pendant(self, i: int, j: int) -> int:
        return self.n + i * self.p + j

    def pendant_owner(self, v: int) -> int:
        if v < self.n:
            raise GraphError(f"{v} is a spine vertex")
        return (v - self.n) // self.p

    def spine_distance(self, i: int, j: int) -> int:
        d = abs(i - j)
        if self.family == "cycle":
            d = min(d, self.n - d)
        return d

    def distance(self, u: int, v: int) -> int:
        """Exact graph distance, via the spine route (pendants have degree 1)."""
        iu = u if u < self.n else self.pendant_owner(u)
        iv = v if v < self.n else self.pendant_owner(v)
        if u == v:
            return 0
        d = self.spine_distance(iu, iv)
        if u >= self.n:
            d += 1
        if v >= self.n:
            d += 1
        return d


@dataclass(frozen=True)
class Graph:
    """Simple loopless undirected graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]
    layout: Optional[CoronaLayout] = None

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"edge ({u},{v}) out of range")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def canonical_edges(self) -> list[tuple[int, int]]:
        """Edges as sorted (lo, hi) pairs in lexicographic order."""
        return sorted(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.canonical_edges():
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


@dataclass(frozen=True)
class OrientedGraph:
    """An orientation of a Graph: one direction per edge, no opposite arcs."""

    base: Graph
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for t, h in self.arcs:
            if (min(t, h), max(t, h)) not in self.base.edges:
                raise GraphError(f"arc ({t},{h}) is not a base edge")
            if (h, t) in seen or (t, h) in seen:
                raise GraphError(f"duplicate or opposite arc on {{{t},{h}}}")
            seen.add((t, h))
        if len(self.arcs) != self.base.edge_count:
            raise GraphError("orientation must direct every edge exactly once")

    @property
    def vertex_count(self) -> int:
        return self.base.vertex_count

    def out_adjacency(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for t, h in self.arcs:
            out[t].append(h)
        return out

    def in_adjacency(self) -> list[list[int]]:
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for t, h in self.arcs:
            inc[h].append(t)
        return inc

    def arc_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.arcs)


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs distances; UNREACHABLE (None) marks disconnected pairs."""

    values: tuple[tuple[Optional[int], ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.values)

    def value(self, u: int, v: int) -> Optional[int]:
        return self.values[u][v]


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    edges = frozenset((i, i + 1) for i in range(n - 1))
    return Graph(n, edges, CoronaLayout("path", n, 0))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    edges = frozenset((i, (i + 1) % n) for i in range(n))
    return Graph(n, edges, CoronaLayout("cycle", n, 0))


def generalized_corona(g: Graph, p: int) -> Graph:
    """Attach p pendant neighbors to every vertex of g.

    p = 0 returns g unchanged (documented identity case).
    """
    if g.vertex_count < 1:
        raise GraphError("corona base needs at least one vertex")
    if p < 0:
        raise GraphError("p must be >= 0")
    if p == 0:
        return g
    n = g.vertex_count
    edges = set(g.edges)
    for i in range(n):
        for j in range(p):
            edges.add((i, n + i * p + j))
    layout = None
    if g.layout is not None and g.layout.p == 0:
        layout = CoronaLayout(g.layout.family, g.layout.n, p)
    return Graph(n * (1 + p), frozenset(edges), layout)


def corona(family: str, n: int, p: int) -> Graph:
    base = path(n) if family == "path" else cycle(n)
    return generalized_corona(base, p)


def _bfs(adj: list[list[int]], start: int) -> list[Optional[int]]:
    dist: list[Optional[int]] = [UNREACHABLE] * len(adj)
    dist[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in adj[u]:
            if dist[w] is UNREACHABLE:
                dist[w] = du + 1
                queue.append(w)
    return dist


def distances(g: Graph) -> DistanceMatrix:
    """Exact shortest-path distances by BFS from every vertex."""
    adj = g.adjacency()
    rows = tuple(tuple(_bfs(adj, v)) for v in range(g.vertex_count))
    return DistanceMatrix(rows)


def orient(g: Graph, dirs) -> OrientedGraph:
    """Direct each canonical edge: False = low-to-high, True = reversed."""
    edges = g.canonical_edges()
    dirs = list(dirs)
    if len(dirs) != len(edges):
        raise GraphError(
            f"need {len(edges)} directions, got {len(dirs)}"
        )
    arcs = tuple((v, u) if flip else (u, v) for (u, v), flip in zip(edges, dirs))
    return OrientedGraph(g, arcs)


def weak_directed_distances(og: OrientedGraph) -> DistanceMatrix:
    """Weak directed distance: shortest directed path in either direction."""
    out = og.out_adjacency()
    fwd = [_bfs(out, v) for v in range(og.vertex_count)]
    nv = og.vertex_count
    rows = []
    for u in range(nv):
        row = []
        for v in range(nv):
            a, b = fwd[u][v], fwd[v][u]
            if a is UNREACHABLE:
                row.append(b)
            elif b is UNREACHABLE:
                row.append(a)
            else:
                row.append(min(a, b))
        rows.append(tuple(row))
    return DistanceMatrix(tuple(rows))


def sources_and_sinks(
    og: OrientedGraph, restrict=None
) -> tuple[frozenset[int], frozenset[int]]:
    """Vertices of in-degree 0 / out-degree 0; isolated vertices are both."""
    indeg = [0] * og.vertex_count
    outdeg = [0] * og.vertex_count
    for t, h in og.arcs:
        outdeg[t] += 1
        indeg[h] += 1
    verts = range(og.vertex_count) if restrict is None else restrict
    sources = frozenset(v for v in verts if indeg[v] == 0)
    sinks = frozenset(v for v in verts if outdeg[v] == 0)
    return sources, sinks


def enumerate_orientations(g: Graph, limit: int = 24) -> Iterator[OrientedGraph]:
    """All 2^|E| orientations, in increasing order of the direction bit vector.

    Bit i of the counter flips canonical edge i.
    """
    m = g.edge_count
    if m > limit:
        raise GraphError(f"{m} edges exceeds enumeration limit {limit}")
    for bits in range(1 << m):
        yield orient(g, [bool((bits >> i) & 1) for i in range(m)])


def find_corona_conflict(
    layout: CoronaLayout, colors: Coloring
) -> Optional[tuple[int, int, int]]:
    """First packing violation (u, v, d) of a coloring on a corona, else None.

    Uses the closed-form corona metric; conflicts for single-digit colors can
    only involve spine indices at most 9 apart, so a sliding window suffices.
    """
    n, p = layout.n, layout.p
    if len(colors) != layout.vertex_count:
        raise GraphError("coloring must be total")
    max_c = max(colors)
    # (offset-from-spine, vertex) per spine index
    groups: list[list[tuple[int, int]]] = []
    for i in range(n):
        items = [(0, i)]
        items.extend((1, layout.pendant(i, j)) for j in range(p))
        groups.append(items)
    span = min(max_c, n if layout.family == "path" else n // 2)
    for i in range(n):
        for off_u, u in groups[i]:
            cu = colors[u]
            # same spine index
            for off_v, v in groups[i]:
                if v <= u:
                    continue
                if colors[v] == cu and off_u + off_v <= cu:
                    return (u, v, off_u + off_v)
            for step in range(1, span + 1):
                j = i + step
                if layout.family == "path":
                    if j >= n:
                        break
                else:
                    j %= n
                base = layout.spine_distance(i, j)
                if base + off_u > cu:
                    continue
                for off_v, v in groups[j]:
                    if colors[v] == cu and base + off_u + off_v <= cu:
                        return (u, v, base + off_u + off_v)
    return None


def bipartition(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Two-color a connected graph; None if it is not bipartite."""
    side = [-1] * g.vertex_count
    adj = g.adjacency()
    side[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if side[w] == -1:
                side[w] = 1 - side[u]
                queue.append(w)
            elif side[w] == side[u]:
                return None
    if any(s == -1 for s in side):
        raise GraphError("graph is not connected")
    part0 = frozenset(v for v in range(g.vertex_count) if side[v] == 0)
    part1 = frozenset(v for v in range(g.vertex_count) if side[v] == 1)
    return part0, part1
