"""Quaternion unit gain graphs: gains, adjacency, switching, walk gains.

A gain is stored once per edge, on the orientation ``(u, v)`` with ``u < v``.
The reverse gain is always the conjugate and is computed on demand, so the
orientation-reversal rule cannot be violated.

Walk gains multiply on the right in walk order.  Quaternions do not commute,
so accumulating on the left instead gives a different quaternion in general.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping, Sequence, Union

from .qlinalg import QMatrix
from .quaternion import (ONE, ZERO, Q8_SYMBOLS, Quaternion, UnitQuaternion, conjugate,
                         format_quaternion, is_real, multiply, q8_index, real_part)

SwitchingFunction = tuple  # tuple of UnitQuaternion indexed by vertex
Walk = Sequence[int]


class GraphError(ValueError):
    pass


class GainGraph:
    """Simple undirected graph on ``0..n-1`` with a unit gain per oriented edge."""

    __slots__ = ("n", "_gains", "edges", "adj")

    def __init__(self, n: int, gains: Union[Mapping, Iterable] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        items = gains.items() if isinstance(gains, Mapping) else gains
        stored = {}
        for item in items:
            if len(item) == 3:
                u, v, q = item
            elif isinstance(item[0], tuple):
                (u, v), q = item
            else:
                (u, v), q = item, ONE
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            q = UnitQuaternion.of(q)
            key = (u, v) if u < v else (v, u)
            if key in stored:
                raise GraphError(f"duplicate edge {key}")
            stored[key] = q if u < v else conjugate(q)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_gains", dict(sorted(stored.items())))
        object.__setattr__(self, "edges", tuple(self._gains))
        nb = [[] for _ in range(n)]
        for u, v in self.edges:
            nb[u].append(v)
            nb[v].append(u)
        object.__setattr__(self, "adj", tuple(tuple(sorted(x)) for x in nb))

    def __setattr__(self, name, value):
        raise AttributeError("GainGraph is immutable")

    @property
    def gains(self) -> dict:
        """Canonical gains keyed by ``(u, v)`` with ``u < v``."""
        return dict(self._gains)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._gains

    def neighbors(self, v: int) -> tuple:
        return self.adj[v]

    def underlying(self) -> "GainGraph":
        return GainGraph(self.n, {e: ONE for e in self.edges})

    def __eq__(self, other):
        if not isinstance(other, GainGraph):
            return NotImplemented
        return self.n == other.n and self._gains == other._gains

    def __hash__(self):
        return hash((self.n, tuple(self._gains.items())))

    def __repr__(self):
        return f"GainGraph(n={self.n}, edges={len(self.edges)})"

    def encode(self) -> str:
        """Compact canonical text, e.g. ``"4|0-1:i|1-2:1"``; sortable and unique."""
        parts = [str(self.n)]
        for (u, v), q in self._gains.items():
            k = q8_index(q)
            label = Q8_SYMBOLS[k] if k >= 0 else format_quaternion(q).replace(" ", ",")
            parts.append(f"{u}-{v}:{label}")
        return "|".join(parts)


def gain_of(g: GainGraph, u: int, v: int) -> UnitQuaternion:
    if u < v:
        q = g._gains.get((u, v))
        if q is not None:
            return q
    else:
        q = g._gains.get((v, u))
        if q is not None:
            return conjugate(q)
    raise GraphError(f"({u}, {v}) is not an edge")


def adjacency_matrix(g: GainGraph) -> QMatrix:
    n = g.n
    out = [ZERO] * (n * n)
    for (u, v), q in g._gains.items():
        out[u * n + v] = q
        out[v * n + u] = conjugate(q)
    return QMatrix(n, n, out)


def as_switching(theta, n: int) -> SwitchingFunction:
    """Validate a switching function given as a sequence or a vertex mapping."""
    if isinstance(theta, Mapping):
        missing = [v for v in range(n) if v not in theta]
        if missing:
            raise GraphError(f"switching function undefined on vertices {missing}")
        theta = [theta[v] for v in range(n)]
    theta = tuple(UnitQuaternion.of(t) for t in theta)
    if len(theta) != n:
        raise GraphError(f"switching function has {len(theta)} values for {n} vertices")
    return theta


def switch(g: GainGraph, theta) -> GainGraph:
    """Gain of xy becomes theta(x)* . gain(xy) . theta(y)."""
    theta = as_switching(theta, g.n)
    return GainGraph(g.n, {(u, v): multiply(multiply(conjugate(theta[u]), q), theta[v])
                           for (u, v), q in g._gains.items()})


def inverse_switching(theta) -> SwitchingFunction:
    return tuple(conjugate(UnitQuaternion.of(t)) for t in theta)


def bfs_tree(g: GainGraph, root: int = 0) -> list:
    """Tree edges ``(parent, child)`` in BFS discovery order, ascending neighbors."""
    seen = [False] * g.n
    seen[root] = True
    queue = deque([root])
    tree = []
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = True
                tree.append((u, w))
                queue.append(w)
    if not all(seen):
        raise GraphError("graph is disconnected")
    return tree


def normalize_to_spanning_tree(g: GainGraph):
    """Switch so every BFS-tree edge (root 0) has gain 1.

    Returns ``(switched_graph, theta)``; the non-tree edges keep the residual
    gains.  ``switch(switched_graph, inverse_switching(theta)) == g``.
    """
    if g.n == 0:
        return g, ()
    theta = [None] * g.n
    theta[0] = ONE
    for p, c in bfs_tree(g, 0):
        theta[c] = multiply(conjugate(gain_of(g, p, c)), theta[p])
    theta = tuple(theta)
    return switch(g, theta), theta


def walk_gain(g: GainGraph, walk: Walk) -> UnitQuaternion:
    walk = list(walk)
    if not walk:
        raise GraphError("empty walk")
    acc = ONE
    for a, b in zip(walk, walk[1:]):
        acc = multiply(acc, gain_of(g, a, b))
    return acc


def _closed(g: GainGraph, cycle: Walk) -> list:
    c = list(cycle)
    if len(c) > 1 and c[0] == c[-1]:
        c = c[:-1]
    if len(c) < 3 or len(set(c)) != len(c):
        raise GraphError(f"{list(cycle)} is not a cycle")
    for a, b in zip(c, c[1:] + c[:1]):
        if not g.has_edge(a, b):
            raise GraphError(f"{list(cycle)} is not a cycle: ({a}, {b}) missing")
    return c + c[:1]


def cycle_gain(g: GainGraph, cycle: Walk) -> UnitQuaternion:
    """Gain of the closed walk around ``cycle`` starting at ``cycle[0]``."""
    return walk_gain(g, _closed(g, cycle))


def cycle_gain_real_part(g: GainGraph, cycle: Walk):
    return real_part(cycle_gain(g, cycle))


def cycle_gain_is_real(g: GainGraph, cycle: Walk) -> bool:
    return is_real(cycle_gain(g, cycle))


def path_graph(n: int, gains: Sequence[Quaternion] = None) -> GainGraph:
    gains = list(gains) if gains is not None else [ONE] * max(n - 1, 0)
    return GainGraph(n, {(i, i + 1): gains[i] for i in range(n - 1)})


def cycle_graph(n: int, gains: Sequence[Quaternion] = None) -> GainGraph:
    """n-cycle 0-1-...-(n-1)-0; ``gains[i]`` sits on the step i -> i+1 (mod n)."""
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    gains = list(gains) if gains is not None else [ONE] * n
    return GainGraph(n, [(i, (i + 1) % n, gains[i]) for i in range(n)])


def normalized_cycle(n: int, h: Quaternion) -> GainGraph:
    """C_n(h): gain 1 everywhere except the closing step n-1 -> 0 with gain h."""
    return cycle_graph(n, [ONE] * (n - 1) + [h])
