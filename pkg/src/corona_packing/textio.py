"""Text formats for graphs and colorings, plus DOT export.

Graph format: header ``g <nvertices> <nedges> <undirected|oriented>``, then
one line per edge, ``e u v`` for undirected or ``a tail head`` for oriented.
Lines starting with ``#`` are comments.  Coloring format: ``v <index> <color>``
per vertex.
"""

from __future__ import annotations

from typing import Optional, Union

from .graphs import Coloring, Graph, GraphError, OrientedGraph, orient


class TextFormatError(ValueError):
    pass


AnyGraph = Union[Graph, OrientedGraph]


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def parse_graph(text: str) -> AnyGraph:
    lines = list(_data_lines(text))
    if not lines:
        raise TextFormatError("empty graph file")
    lineno, header = lines[0]
    if len(header) != 4 or header[0] != "g":
        raise TextFormatError(f"line {lineno}: bad header {' '.join(header)!r}")
    try:
        nv, ne = int(header[1]), int(header[2])
    except ValueError:
        raise TextFormatError(f"line {lineno}: bad vertex/edge counts") from None
    kind = header[3]
    if kind not in ("undirected", "oriented"):
        raise TextFormatError(f"line {lineno}: unknown kind {kind!r}")
    tag = "e" if kind == "undirected" else "a"
    pairs: list[tuple[int, int]] = []
    for lineno, parts in lines[1:]:
        if parts[0] != tag or len(parts) != 3:
            raise TextFormatError(f"line {lineno}: expected '{tag} u v'")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise TextFormatError(f"line {lineno}: bad endpoints") from None
        pairs.append((u, v))
    if len(pairs) != ne:
        raise TextFormatError(f"edge count mismatch: header {ne}, found {len(pairs)}")
    try:
        base = Graph(nv, frozenset((min(u, v), max(u, v)) for u, v in pairs))
        if base.edge_count != ne:
            raise TextFormatError("duplicate edges in file")
        if kind == "undirected":
            return base
        direction = {(min(u, v), max(u, v)): (u, v) for u, v in pairs}
        dirs = [direction[e] != e for e in base.canonical_edges()]
        return orient(base, dirs)
    except GraphError as exc:
        raise TextFormatError(str(exc)) from None


def format_graph(g: AnyGraph) -> str:
    out = []
    if isinstance(g, OrientedGraph):
        out.append(f"g {g.vertex_count} {len(g.arcs)} oriented")
        out.extend(f"a {t} {h}" for t, h in g.arcs)
    else:
        out.append(f"g {g.vertex_count} {g.edge_count} undirected")
        out.extend(f"e {u} {v}" for u, v in g.canonical_edges())
    return "\n".join(out) + "\n"


def parse_coloring(text: str, vertex_count: Optional[int] = None) -> Coloring:
    assigned: dict[int, int] = {}
    for lineno, parts in _data_lines(text):
        if parts[0] != "v" or len(parts) != 3:
            raise TextFormatError(f"line {lineno}: expected 'v index color'")
        try:
            v, c = int(parts[1]), int(parts[2])
        except ValueError:
            raise TextFormatError(f"line {lineno}: bad numbers") from None
        if c < 1:
            raise TextFormatError(f"line {lineno}: colors start at 1")
        if v in assigned:
            raise TextFormatError(f"line {lineno}: vertex {v} colored twice")
        assigned[v] = c
    n = vertex_count if vertex_count is not None else (
        max(assigned) + 1 if assigned else 0
    )
    missing = [v for v in range(n) if v not in assigned]
    if missing or any(v >= n for v in assigned):
        raise TextFormatError(
            f"coloring is not total on 0..{n - 1}"
            + (f" (missing {missing[:5]})" if missing else "")
        )
    return tuple(assigned[v] for v in range(n))


def format_coloring(coloring: Coloring) -> str:
    return "\n".join(f"v {v} {c}" for v, c in enumerate(coloring)) + "\n"


def to_dot(g: AnyGraph, coloring: Optional[Coloring] = None) -> str:
    """DOT text; vertex labels are "v:color" when a coloring is given."""
    oriented = isinstance(g, OrientedGraph)
    name = "digraph" if oriented else "graph"
    link = "->" if oriented else "--"
    lines = [f"{name} g {{"]
    for v in range(g.vertex_count):
        label = f"{v}:{coloring[v]}" if coloring is not None else str(v)
        lines.append(f'  {v} [label="{label}"];')
    pairs = g.arcs if oriented else g.canonical_edges()
    for u, v in pairs:
        lines.append(f"  {u} {link} {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
