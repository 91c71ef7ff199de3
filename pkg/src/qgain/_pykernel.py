"""Pure-Python hot kernels.

Same API as the compiled ``_kernel`` extension.  Quaternions are 4-tuples of
Python ints here, so nothing overflows; the compiled twin works in int64 and
signals overflow by returning ``None`` from :func:`qrank`.

Graph encoding shared by both kernels: vertices ``0..n-1``; bit ``b`` of an
edge mask selects the ``b``-th pair of :func:`pair_list` (lexicographic
``u < v``).  Gain digits index :data:`Q8_TABLE` and are attached to the
orientation ``u -> v`` of each present edge, edges taken in increasing bit
order; in exhaustive mode the first edge is the least significant base-8 digit.
"""
from math import gcd

import numpy as np

BACKEND = "python"

Q8_TABLE = (
    (1, 0, 0, 0), (-1, 0, 0, 0),
    (0, 1, 0, 0), (0, -1, 0, 0),
    (0, 0, 1, 0), (0, 0, -1, 0),
    (0, 0, 0, 1), (0, 0, 0, -1),
)
Q8_CONJ = (0, 1, 3, 2, 5, 4, 7, 6)
_ZERO = (0, 0, 0, 0)


def pair_list(n):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _qmul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def _reduce(row, start):
    g = 0
    for q in row[start:]:
        for x in q:
            if x:
                g = gcd(g, x)
                if g == 1:
                    return row
    if g > 1:
        for c in range(start, len(row)):
            row[c] = tuple(x // g for x in row[c])
    return row


def qrank(rows, cols, data):
    """Left row rank of an integer-quaternion matrix by fraction-free elimination.

    ``data`` is flat, row-major, four components per entry.  Returns
    ``(rank, pivots)`` where each pivot is ``(original_row, column)``.

    The pivot row is left-multiplied by the conjugate of its pivot (making the
    pivot the positive real N(pivot)), then each lower row becomes
    ``d * row - a * pivot_row``.  Real scalars are central, so left spans and
    pivot positions agree with the textbook division-based elimination.
    """
    M = [[tuple(data[(r * cols + c) * 4:(r * cols + c) * 4 + 4]) for c in range(cols)]
         for r in range(rows)]
    order = list(range(rows))
    rank = 0
    pivots = []
    for c in range(cols):
        if rank == rows:
            break
        p = rank
        while p < rows and M[p][c] == _ZERO:
            p += 1
        if p == rows:
            continue
        M[rank], M[p] = M[p], M[rank]
        order[rank], order[p] = order[p], order[rank]
        pv = M[rank][c]
        pc = (pv[0], -pv[1], -pv[2], -pv[3])
        prow = M[rank]
        for cc in range(c, cols):
            if prow[cc] != _ZERO:
                prow[cc] = _qmul(pc, prow[cc])
        _reduce(prow, c)
        d = prow[c][0]
        for i in range(rank + 1, rows):
            row = M[i]
            a = row[c]
            if a == _ZERO:
                continue
            for cc in range(c, cols):
                y = prow[cc]
                x = row[cc]
                if y == _ZERO:
                    if x != _ZERO:
                        row[cc] = (d * x[0], d * x[1], d * x[2], d * x[3])
                    continue
                ay = _qmul(a, y)
                row[cc] = (d * x[0] - ay[0], d * x[1] - ay[1], d * x[2] - ay[2], d * x[3] - ay[3])
            _reduce(row, c + 1)
        pivots.append((order[rank], c))
        rank += 1
    return rank, pivots


def _adjacency_bits(n, mask):
    adj = [0] * n
    b = 0
    for u in range(n):
        for v in range(u + 1, n):
            if mask >> b & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            b += 1
    return adj


def _connected(n, adj):
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def graph_girth(n, mask):
    """Girth of the graph encoded by ``mask``; 0 when acyclic."""
    adj = _adjacency_bits(n, mask)
    best = 0
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if best and 2 * dist[u] >= best:
                break
            nb = adj[u]
            while nb:
                low = nb & -nb
                w = low.bit_length() - 1
                nb ^= low
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if not best or length < best:
                        best = length
    return best


def scan_graphs(n):
    """Masks and girths of every connected labeled graph on ``n`` vertices with a cycle."""
    m = n * (n - 1) // 2
    masks = []
    girths = []
    for mask in range(1 << m):
        if bin(mask).count("1") < n:
            continue
        adj = _adjacency_bits(n, mask)
        if not _connected(n, adj):
            continue
        masks.append(mask)
        girths.append(graph_girth(n, mask))
    return np.array(masks, dtype=np.int64), np.array(girths, dtype=np.int8)


def _edges_of(n, mask):
    return [uv for b, uv in enumerate(pair_list(n)) if mask >> b & 1]


def _rank_with_digits(n, edges, digits):
    data = [0] * (n * n * 4)
    for (u, v), d in zip(edges, digits):
        q = Q8_TABLE[d]
        qc = Q8_TABLE[Q8_CONJ[d]]
        data[(u * n + v) * 4:(u * n + v) * 4 + 4] = q
        data[(v * n + u) * 4:(v * n + u) * 4 + 4] = qc
    return qrank(n, n, data)[0]


def q8_ranks_exhaustive(n, mask, start, stop):
    """Ranks for gain assignments ``start..stop-1`` (base-8 digits, first edge lowest)."""
    edges = _edges_of(n, mask)
    out = np.empty(stop - start, dtype=np.int8)
    for t in range(start, stop):
        digits = []
        x = t
        for _ in edges:
            digits.append(x & 7)
            x >>= 3
        out[t - start] = _rank_with_digits(n, edges, digits)
    return out


def q8_ranks_choices(n, masks, choices):
    """Ranks for explicit digit arrays: ``choices[g, s, e]`` is the gain of edge ``e``."""
    masks = np.asarray(masks, dtype=np.int64)
    choices = np.asarray(choices, dtype=np.uint8)
    out = np.empty(choices.shape[:2], dtype=np.int8)
    for g, mask in enumerate(masks):
        edges = _edges_of(n, int(mask))
        for s in range(choices.shape[1]):
            out[g, s] = _rank_with_digits(n, edges, choices[g, s, :len(edges)].tolist())
    return out
