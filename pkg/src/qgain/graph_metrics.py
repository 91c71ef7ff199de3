"""Combinatorial metrics of the underlying graph.

Every function accepts any object with ``n``, ``edges`` (pairs ``u < v``) and
``adj`` (sorted neighbor tuples), in practice a :class:`GainGraph`.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .gain_graph import GraphError


@dataclass(frozen=True)
class GirthReport:
    girth: Optional[int]  # None when the graph is acyclic
    witness_cycle: tuple = ()

    @property
    def acyclic(self) -> bool:
        return self.girth is None

    def to_dict(self) -> dict:
        if self.acyclic:
            return {"girth": "acyclic"}
        return {"girth": self.girth, "witness": list(self.witness_cycle)}


@dataclass(frozen=True)
class BipartitionReport:
    is_bipartite: bool
    parts: Optional[tuple] = None  # (sorted tuple, sorted tuple) when bipartite


def is_connected(g) -> bool:
    if g.n < 1:
        raise GraphError("connectivity is defined for n >= 1")
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def _bfs_shortest_cycle(g, root, bound):
    # shortest closed walk through a non-tree edge seen from ``root``
    dist = [-1] * g.n
    parent = [-1] * g.n
    dist[root] = 0
    queue = deque([root])
    best = None
    while queue:
        u = queue.popleft()
        if bound is not None and 2 * dist[u] >= bound:
            break
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
            elif parent[u] != w:
                length = dist[u] + dist[w] + 1
                if (bound is None or length < bound) and (best is None or length < best[0]):
                    best = (length, u, w, list(parent))
    return best


def _path_to_root(parent, v):
    path = [v]
    while parent[v] >= 0:
        v = parent[v]
        path.append(v)
    return path[::-1]


def girth(g) -> GirthReport:
    """Shortest cycle length by BFS from every root, with a witness cycle."""
    best = None
    for root in range(g.n):
        found = _bfs_shortest_cycle(g, root, best[0] if best else None)
        if found is not None:
            best = found
    if best is None:
        return GirthReport(None)
    length, u, w, parent = best
    pu = _path_to_root(parent, u)
    pw = _path_to_root(parent, w)
    k = 0
    while k + 1 < min(len(pu), len(pw)) and pu[k + 1] == pw[k + 1]:
        k += 1
    cycle = pu[k:] + pw[k + 1:][::-1]
    if len(cycle) != length:
        raise AssertionError("girth witness does not match the girth")
    return GirthReport(length, tuple(cycle))


def bipartition(g) -> BipartitionReport:
    if not is_connected(g):
        raise GraphError("bipartition requires a connected graph")
    color = [-1] * g.n
    color[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if color[w] < 0:
                color[w] = 1 - color[u]
                queue.append(w)
            elif color[w] == color[u]:
                return BipartitionReport(False)
    parts = (tuple(v for v in range(g.n) if color[v] == 0),
             tuple(v for v in range(g.n) if color[v] == 1))
    return BipartitionReport(True, parts)


def complete_bipartite_parts(g) -> Optional[tuple]:
    """The two parts when the graph is complete bipartite, else None."""
    report = bipartition(g)
    if not report.is_bipartite:
        return None
    x, y = report.parts
    if len(g.edges) != len(x) * len(y):
        return None
    return report.parts


def is_complete_bipartite(g) -> bool:
    return complete_bipartite_parts(g) is not None


def is_chordless(g, cycle) -> bool:
    """True when no edge joins two non-consecutive vertices of ``cycle``."""
    cyc = list(cycle)
    m = len(cyc)
    for a in range(m):
        for b in range(a + 2, m):
            if a == 0 and b == m - 1:
                continue
            if cyc[b] in g.adj[cyc[a]]:
                return False
    return True


def find_induced_cycle_of_girth(g) -> tuple:
    """A shortest cycle; shortest cycles never have chords."""
    report = girth(g)
    if report.acyclic:
        raise GraphError("graph is acyclic")
    return report.witness_cycle


def all_cycles_up_to(g, max_len: int) -> list:
    """Every simple cycle with at most ``max_len`` vertices, each listed once.

    Canonical form: the smallest vertex first, then the direction whose second
    vertex is smaller than the last.  Output is sorted by (length, cycle).
    """
    if max_len < 3:
        raise ValueError("max_len must be at least 3")
    out = []
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def extend():
            u = path[-1]
            for w in g.adj[u]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                elif w > s and w not in on_path and len(path) < max_len:
                    path.append(w)
                    on_path.add(w)
                    extend()
                    path.pop()
                    on_path.discard(w)

        extend()
    out.sort(key=lambda c: (len(c), c))
    return out
