"""Backend selection for the hot kernels.

The compiled extension is used when it imports; set ``QGAIN_PURE_PYTHON=1``
to force the pure-Python kernel.  Both expose the same functions, and the
wrappers here route int64 overflow in the compiled path to the Python one.
"""
import os

import numpy as np

from . import _pykernel

if os.environ.get("QGAIN_PURE_PYTHON"):
    _impl = _pykernel
else:
    try:
        from . import _kernel as _impl
    except ImportError:  # extension not built
        _impl = _pykernel

BACKEND = _impl.BACKEND
Q8_TABLE = _pykernel.Q8_TABLE
Q8_CONJ = _pykernel.Q8_CONJ
pair_list = _pykernel.pair_list
graph_girth = _impl.graph_girth
scan_graphs = _impl.scan_graphs


def qrank(rows, cols, data):
    """``(rank, pivots)`` of a flat integer-quaternion matrix; never overflows."""
    out = _impl.qrank(rows, cols, data)
    if out is None:
        out = _pykernel.qrank(rows, cols, [int(x) for x in data])
    return out


def q8_ranks_exhaustive(n, mask, start, stop):
    ranks = _impl.q8_ranks_exhaustive(n, int(mask), int(start), int(stop))
    for t in np.flatnonzero(ranks < 0):
        ranks[t] = _pykernel.q8_ranks_exhaustive(n, int(mask), int(start + t), int(start + t + 1))[0]
    return ranks


def q8_ranks_choices(n, masks, choices):
    ranks = _impl.q8_ranks_choices(n, masks, choices)
    for g, s in zip(*np.nonzero(ranks < 0)):
        ranks[g, s] = _pykernel.q8_ranks_choices(n, masks[g:g + 1], choices[g:g + 1, s:s + 1])[0, 0]
    return ranks
