"""Exact decision, optimization, and counting for packing colorings.

Works on any DistanceMatrix, so the undirected and weak-directed metrics
share one search.  A vertex pair conflicts under color i when its distance
is defined and at most i; UNREACHABLE pairs never conflict.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Optional

from .graphs import Coloring, DistanceMatrix, UNREACHABLE


class Outcome(enum.Enum):
    YES = "YES"
    NO = "NO"
    INDETERMINATE = "INDETERMINATE"


@dataclass(frozen=True)
class SearchBudget:
    max_color: Optional[int] = None  # cap for pcn deepening; None = vertex count
    node_limit: Optional[int] = 10**9
    time_limit: Optional[float] = None  # seconds

    def __post_init__(self):
        if self.max_color is not None and self.max_color < 1:
            raise ValueError("max_color must be >= 1")


@dataclass(frozen=True)
class SearchResult:
    outcome: Outcome
    witness: Optional[Coloring] = None
    nodes: int = 0


@dataclass(frozen=True)
class CountResult:
    outcome: Outcome
    count: Optional[int] = None
    nodes: int = 0


@dataclass(frozen=True)
class PcnResult:
    outcome: Outcome
    value: Optional[int] = None
    witness: Optional[Coloring] = None
    nodes: int = 0


def is_packing_coloring(dm: DistanceMatrix, coloring: Coloring) -> bool:
    return first_packing_conflict(dm, coloring) is None


def first_packing_conflict(
    dm: DistanceMatrix, coloring: Coloring
) -> Optional[tuple[int, int, int]]:
    """First (u, v, d) with equal colors c and d <= c, scanning u < v."""
    nv = dm.vertex_count
    if len(coloring) != nv:
        raise ValueError("coloring must assign every vertex")
    if any(c < 1 for c in coloring):
        raise ValueError("colors must be >= 1")
    for u in range(nv):
        row = dm.values[u]
        cu = coloring[u]
        for v in range(u + 1, nv):
            if coloring[v] != cu:
                continue
            d = row[v]
            if d is not UNREACHABLE and d <= cu:
                return (u, v, d)
    return None


class _Searcher:
    """Backtracking core shared by decision, optimization and counting."""

    def __init__(self, dm: DistanceMatrix, k: int, budget: SearchBudget,
                 counting: bool = False):
        self.dm = dm
        self.k = k
        self.counting = counting
        self.node_limit = budget.node_limit
        self.deadline = (
            time.monotonic() + budget.time_limit if budget.time_limit else None
        )
        nv = dm.vertex_count
        degree = [
            sum(1 for d in dm.values[v] if d == 1) for v in range(nv)
        ]
        self.order = sorted(range(nv), key=lambda v: (-degree[v], v))
        self.pos = [0] * nv
        for idx, v in enumerate(self.order):
            self.pos[v] = idx
        # ball[c][v]: bitmask of vertices within distance c of v (v excluded)
        self.balls = [
            [self._ball(v, c) for v in range(nv)] for c in range(k + 1)
        ]
        self.twin_pred = self._twin_predecessors() if not counting else [None] * nv
        self.nodes = 0
        self.exhausted = False

    def _ball(self, v: int, c: int) -> int:
        mask = 0
        for w, d in enumerate(self.dm.values[v]):
            if w != v and d is not UNREACHABLE and d <= c:
                mask |= 1 << w
        return mask

    def _twin_predecessors(self) -> list[Optional[int]]:
        """For each vertex, an earlier interchangeable twin in search order.

        A twin class has pairwise-equal distance rows off the pair and one
        uniform internal distance, so any color permutation inside it is a
        distance automorphism; forcing nondecreasing colors along the class
        is a sound symmetry break for decision searches (never counting).
        """
        nv = self.dm.vertex_count
        unset = object()
        classes: list[list] = []  # [members, internal distance]
        for v in range(nv):
            for entry in classes:
                members, dist = entry
                d = self.dm.values[members[0]][v]
                if dist is not unset and d != dist:
                    continue
                if all(
                    self._is_twin(w, v) and self.dm.values[w][v] == d
                    for w in members
                ):
                    members.append(v)
                    entry[1] = d
                    break
            else:
                classes.append([[v], unset])
        pred: list[Optional[int]] = [None] * nv
        for members, _ in classes:
            members.sort(key=lambda v: self.pos[v])
            for a, b in zip(members, members[1:]):
                pred[b] = a
        return pred

    def _is_twin(self, u: int, v: int) -> bool:
        ru, rv = self.dm.values[u], self.dm.values[v]
        for w in range(self.dm.vertex_count):
            if w == u or w == v:
                continue
            if ru[w] != rv[w]:
                return False
        return True

    def _tick(self) -> bool:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            self.exhausted = True
            return False
        if self.deadline is not None and self.nodes % 4096 == 0:
            if time.monotonic() > self.deadline:
                self.exhausted = True
                return False
        return True

    def run(self):
        nv = self.dm.vertex_count
        colors = [0] * nv
        forbidden = [0] * (self.k + 1)  # per color, bitmask of blocked vertices
        full = (1 << nv) - 1
        count = 0
        witness: Optional[Coloring] = None

        def rec(idx: int, uncolored: int):
            nonlocal count, witness
            if idx == nv:
                count += 1
                if witness is None:
                    witness = tuple(colors)
                return not self.counting
            v = self.order[idx]
            bit = 1 << v
            lo = 1
            tp = self.twin_pred[v]
            if tp is not None and colors[tp]:
                lo = colors[tp]
            for c in range(lo, self.k + 1):
                if (forbidden[c] >> v) & 1:
                    continue
                if not self._tick():
                    return True
                colors[v] = c
                saved = forbidden[c]
                forbidden[c] = saved | self.balls[c][v]
                rest = uncolored & ~bit
                dead = rest  # uncolored vertices with no admissible color
                for cc in range(1, self.k + 1):
                    dead &= forbidden[cc]
                    if not dead:
                        break
                if not dead:
                    if rec(idx + 1, rest):
                        forbidden[c] = saved
                        colors[v] = 0
                        return True
                forbidden[c] = saved
                colors[v] = 0
                if self.exhausted:
                    return True
            return False

        rec(0, full)
        return count, witness


def exists_packing_k_coloring(
    dm: DistanceMatrix, k: int, budget: Optional[SearchBudget] = None
) -> SearchResult:
    """Complete backtracking search for a packing k-coloring."""
    if k < 1:
        raise ValueError("k must be >= 1")
    budget = budget or SearchBudget()
    searcher = _Searcher(dm, k, budget)
    count, witness = searcher.run()
    if searcher.exhausted:
        return SearchResult(Outcome.INDETERMINATE, None, searcher.nodes)
    if count:
        assert witness is not None and is_packing_coloring(dm, witness)
        return SearchResult(Outcome.YES, witness, searcher.nodes)
    return SearchResult(Outcome.NO, None, searcher.nodes)


def greedy_upper_bound(dm: DistanceMatrix) -> tuple[int, Coloring]:
    """Greedy coloring in the search order; seeds iterative deepening."""
    nv = dm.vertex_count
    degree = [sum(1 for d in dm.values[v] if d == 1) for v in range(nv)]
    order = sorted(range(nv), key=lambda v: (-degree[v], v))
    colors = [0] * nv
    for v in order:
        c = 1
        while any(
            colors[w] == c and dm.values[v][w] is not UNREACHABLE
            and dm.values[v][w] <= c
            for w in range(nv) if w != v
        ):
            c += 1
        colors[v] = c
    return max(colors), tuple(colors)


def packing_chromatic_number(
    dm: DistanceMatrix, budget: Optional[SearchBudget] = None
) -> PcnResult:
    """Smallest k with a packing k-coloring, with a validated witness."""
    budget = budget or SearchBudget()
    ub, greedy = greedy_upper_bound(dm)
    cap = budget.max_color if budget.max_color is not None else max(
        ub, dm.vertex_count
    )
    nodes = 0
    for k in range(1, min(ub, cap) + 1):
        if k == ub:
            return PcnResult(Outcome.YES, ub, greedy, nodes)
        res = exists_packing_k_coloring(dm, k, budget)
        nodes += res.nodes
        if res.outcome is Outcome.YES:
            return PcnResult(Outcome.YES, k, res.witness, nodes)
        if res.outcome is Outcome.INDETERMINATE:
            return PcnResult(Outcome.INDETERMINATE, None, None, nodes)
    return PcnResult(Outcome.INDETERMINATE, None, None, nodes)


def count_packing_k_colorings(
    dm: DistanceMatrix, k: int, budget: Optional[SearchBudget] = None
) -> CountResult:
    """Number of labeled packing colorings with colors <= k.

    Symmetry breaking is disabled here: the count is over labeled colorings.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    budget = budget or SearchBudget()
    searcher = _Searcher(dm, k, budget, counting=True)
    count, _ = searcher.run()
    if searcher.exhausted:
        return CountResult(Outcome.INDETERMINATE, None, searcher.nodes)
    return CountResult(Outcome.YES, count, searcher.nodes)
