# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels; mirrors ``qgain._pykernel`` function for function.

Entries are int64 and every stored component is kept below 2**30 in
magnitude after content reduction, which bounds each intermediate product
sum below 2**63.  When a row cannot be brought under the bound the rank
routines report overflow (``qrank`` returns None, batch routines store -1)
and the caller recomputes with the arbitrary-precision Python kernel.
"""
from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memset

import numpy as np

BACKEND = "cython"

cdef int64_t LIMIT = (<int64_t>1) << 30

cdef int64_t Q8C[8][4]
Q8C[0][:] = [1, 0, 0, 0]
Q8C[1][:] = [-1, 0, 0, 0]
Q8C[2][:] = [0, 1, 0, 0]
Q8C[3][:] = [0, -1, 0, 0]
Q8C[4][:] = [0, 0, 1, 0]
Q8C[5][:] = [0, 0, -1, 0]
Q8C[6][:] = [0, 0, 0, 1]
Q8C[7][:] = [0, 0, 0, -1]
cdef int Q8CONJ[8]
Q8CONJ[:] = [0, 1, 3, 2, 5, 4, 7, 6]

Q8_TABLE = (
    (1, 0, 0, 0), (-1, 0, 0, 0),
    (0, 1, 0, 0), (0, -1, 0, 0),
    (0, 0, 1, 0), (0, 0, -1, 0),
    (0, 0, 0, 1), (0, 0, 0, -1),
)
Q8_CONJ = (0, 1, 3, 2, 5, 4, 7, 6)


def pair_list(n):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


cdef inline int64_t _gcd(int64_t a, int64_t b) noexcept nogil:
    cdef int64_t t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline bint _is_zero(int64_t* q) noexcept nogil:
    return q[0] == 0 and q[1] == 0 and q[2] == 0 and q[3] == 0


cdef int _reduce_row(int64_t* row, int start, int cols) noexcept nogil:
    """Divide row[start:] by its content; 1 if it still breaks the bound."""
    cdef int64_t g = 0
    cdef int64_t x
    cdef int t
    for t in range(start * 4, cols * 4):
        x = row[t]
        if x:
            g = _gcd(g, x)
            if g == 1:
                break
    if g > 1:
        for t in range(start * 4, cols * 4):
            row[t] = row[t] // g
    for t in range(start * 4, cols * 4):
        x = row[t]
        if x >= LIMIT or x <= -LIMIT:
            return 1
    return 0


cdef int _qrank_c(int64_t* M, int rows, int cols, int* order, int* pcols) noexcept nogil:
    cdef int rank = 0
    cdef int c, cc, p, i, t, w = cols * 4
    cdef int64_t tmp, d, a0, a1, a2, a3, y0, y1, y2, y3, x0, x1, x2, x3
    cdef int64_t* prow
    cdef int64_t* row
    cdef int64_t* y
    cdef int64_t* x

    for t in range(rows * w):
        if M[t] >= LIMIT or M[t] <= -LIMIT:
            return -1
    for t in range(rows):
        order[t] = t

    for c in range(cols):
        if rank == rows:
            break
        p = rank
        while p < rows and _is_zero(M + p * w + c * 4):
            p += 1
        if p == rows:
            continue
        if p != rank:
            for t in range(c * 4, w):
                tmp = M[p * w + t]
                M[p * w + t] = M[rank * w + t]
                M[rank * w + t] = tmp
            t = order[p]
            order[p] = order[rank]
            order[rank] = t
        prow = M + rank * w
        # left-multiply the pivot row by the conjugate of its pivot
        a0 = prow[c * 4]
        a1 = -prow[c * 4 + 1]
        a2 = -prow[c * 4 + 2]
        a3 = -prow[c * 4 + 3]
        for cc in range(c, cols):
            y = prow + cc * 4
            y0 = y[0]; y1 = y[1]; y2 = y[2]; y3 = y[3]
            y[0] = a0 * y0 - a1 * y1 - a2 * y2 - a3 * y3
            y[1] = a0 * y1 + a1 * y0 + a2 * y3 - a3 * y2
            y[2] = a0 * y2 - a1 * y3 + a2 * y0 + a3 * y1
            y[3] = a0 * y3 + a1 * y2 - a2 * y1 + a3 * y0
        if _reduce_row(prow, c, cols):
            return -1
        d = prow[c * 4]
        for i in range(rank + 1, rows):
            row = M + i * w
            if _is_zero(row + c * 4):
                continue
            a0 = row[c * 4]; a1 = row[c * 4 + 1]; a2 = row[c * 4 + 2]; a3 = row[c * 4 + 3]
            for cc in range(c, cols):
                x = row + cc * 4
                y = prow + cc * 4
                y0 = y[0]; y1 = y[1]; y2 = y[2]; y3 = y[3]
                x0 = x[0]; x1 = x[1]; x2 = x[2]; x3 = x[3]
                x[0] = d * x0 - (a0 * y0 - a1 * y1 - a2 * y2 - a3 * y3)
                x[1] = d * x1 - (a0 * y1 + a1 * y0 + a2 * y3 - a3 * y2)
                x[2] = d * x2 - (a0 * y2 - a1 * y3 + a2 * y0 + a3 * y1)
                x[3] = d * x3 - (a0 * y3 + a1 * y2 - a2 * y1 + a3 * y0)
            if _reduce_row(row, c + 1, cols):
                return -1
        pcols[rank] = c
        rank += 1
    return rank


def qrank(int rows, int cols, data):
    """Left row rank of an integer-quaternion matrix, or None on int64 overflow.

    ``data`` is flat, row-major, four components per entry; returns
    ``(rank, pivots)`` with pivots as ``(original_row, column)``.
    """
    cdef int64_t[::1] buf
    try:
        buf = np.ascontiguousarray(data, dtype=np.int64).copy()
    except OverflowError:
        return None
    if buf.shape[0] != rows * cols * 4:
        raise ValueError("data length does not match shape")
    if rows == 0 or cols == 0:
        return 0, []
    cdef int* order = <int*> malloc(rows * sizeof(int))
    cdef int* pcols = <int*> malloc(min(rows, cols) * sizeof(int))
    cdef int r, k
    try:
        r = _qrank_c(&buf[0], rows, cols, order, pcols)
        if r < 0:
            return None
        return r, [(order[k], pcols[k]) for k in range(r)]
    finally:
        free(order)
        free(pcols)


cdef void _fill_adj(int n, long long mask, int* adj) noexcept nogil:
    cdef int u, v, b = 0
    for u in range(n):
        adj[u] = 0
    for u in range(n):
        for v in range(u + 1, n):
            if (mask >> b) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            b += 1


cdef bint _connected(int n, int* adj) noexcept nogil:
    cdef int seen = 1, frontier = 1, nxt, f, u
    while frontier:
        nxt = 0
        f = frontier
        u = 0
        while f:
            if f & 1:
                nxt |= adj[u]
            f >>= 1
            u += 1
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


cdef int _girth(int n, int* adj) noexcept nogil:
    cdef int dist[64]
    cdef int parent[64]
    cdef int queue[64]
    cdef int best = 0, root, head, tail, u, w, nb, length
    for root in range(n):
        for u in range(n):
            dist[u] = -1
            parent[u] = -1
        dist[root] = 0
        queue[0] = root
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            if best and 2 * dist[u] >= best:
                break
            nb = adj[u]
            w = 0
            while nb:
                if nb & 1:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue[tail] = w
                        tail += 1
                    elif parent[u] != w:
                        length = dist[u] + dist[w] + 1
                        if not best or length < best:
                            best = length
                nb >>= 1
                w += 1
    return best


def graph_girth(int n, long long mask):
    """Girth of the graph encoded by ``mask``; 0 when acyclic."""
    cdef int adj[31]
    if n > 31:
        raise ValueError("n too large for the bitmask kernel")
    _fill_adj(n, mask, adj)
    return _girth(n, adj)


def scan_graphs(int n):
    """Masks and girths of every connected labeled graph on ``n`` vertices with a cycle."""
    cdef int m = n * (n - 1) // 2
    cdef long long mask, total
    cdef int adj[31]
    if n > 8:
        raise ValueError("scan_graphs supports n <= 8")
    total = (<long long>1) << m
    masks = []
    girths = []
    for mask in range(total):
        if _popcount(mask) < n:
            continue
        _fill_adj(n, mask, adj)
        if not _connected(n, adj):
            continue
        masks.append(mask)
        girths.append(_girth(n, adj))
    return np.array(masks, dtype=np.int64), np.array(girths, dtype=np.int8)


cdef inline int _popcount(long long x) noexcept nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef int _edges(int n, long long mask, int* eu, int* ev) noexcept nogil:
    cdef int u, v, b = 0, e = 0
    for u in range(n):
        for v in range(u + 1, n):
            if (mask >> b) & 1:
                eu[e] = u
                ev[e] = v
                e += 1
            b += 1
    return e


cdef inline void _load(int64_t* M, int n, int E, int* eu, int* ev, unsigned char* digits) noexcept nogil:
    cdef int e, t, dg
    cdef int64_t* p
    cdef int64_t* q
    memset(M, 0, n * n * 4 * sizeof(int64_t))
    for e in range(E):
        dg = digits[e]
        p = M + (eu[e] * n + ev[e]) * 4
        q = M + (ev[e] * n + eu[e]) * 4
        for t in range(4):
            p[t] = Q8C[dg][t]
            q[t] = Q8C[Q8CONJ[dg]][t]


def q8_ranks_exhaustive(int n, long long mask, long long start, long long stop):
    """Ranks for gain assignments ``start..stop-1`` (base-8 digits, first edge lowest)."""
    cdef int eu[64]
    cdef int ev[64]
    cdef unsigned char digits[64]
    cdef int order[64]
    cdef int pcols[64]
    cdef int E, e
    cdef long long t, x
    if n > 8:
        raise ValueError("q8 kernels support n <= 8")
    E = _edges(n, mask, eu, ev)
    out = np.empty(stop - start, dtype=np.int8)
    cdef signed char[::1] ov = out
    cdef int64_t* M = <int64_t*> malloc(n * n * 4 * sizeof(int64_t))
    x = start
    for e in range(E):
        digits[e] = x & 7
        x >>= 3
    try:
        with nogil:
            for t in range(stop - start):
                _load(M, n, E, eu, ev, digits)
                ov[t] = <signed char> _qrank_c(M, n, n, order, pcols)
                e = 0
                while e < E:
                    digits[e] += 1
                    if digits[e] < 8:
                        break
                    digits[e] = 0
                    e += 1
    finally:
        free(M)
    return out


def q8_ranks_choices(int n, masks, choices):
    """Ranks for explicit digit arrays: ``choices[g, s, e]`` is the gain of edge ``e``."""
    cdef long long[::1] mv = np.ascontiguousarray(masks, dtype=np.int64)
    cdef unsigned char[:, :, ::1] cv = np.ascontiguousarray(choices, dtype=np.uint8)
    cdef int eu[64]
    cdef int ev[64]
    cdef int order[64]
    cdef int pcols[64]
    cdef int G = cv.shape[0], S = cv.shape[1], E, g, s
    if n > 8:
        raise ValueError("q8 kernels support n <= 8")
    if mv.shape[0] != G:
        raise ValueError("masks and choices disagree on the number of graphs")
    for g in range(G):
        if _popcount(mv[g]) > cv.shape[2]:
            raise ValueError("choices row shorter than the edge count")
    out = np.empty((G, S), dtype=np.int8)
    cdef signed char[:, ::1] ov = out
    if S == 0:
        return out
    cdef int64_t* M = <int64_t*> malloc(n * n * 4 * sizeof(int64_t))
    try:
        with nogil:
            for g in range(G):
                E = _edges(n, mv[g], eu, ev)
                for s in range(S):
                    _load(M, n, E, eu, ev, &cv[g, s, 0])
                    ov[g, s] = <signed char> _qrank_c(M, n, n, order, pcols)
    finally:
        free(M)
    return out
