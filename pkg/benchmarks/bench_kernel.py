"""Compare the compiled and pure-Python kernels on the hot paths.

    python benchmarks/bench_kernel.py [--repeat 3]

Prints one line per workload with the best wall time of each backend and the
speedup. Both backends must return identical results; the script exits
non-zero if they do not.
"""
import argparse
import sys
import timeit

import numpy as np

from qgain import _pykernel

try:
    from qgain import _kernel
except ImportError:
    _kernel = None


def _q8_adjacency_data(rng, n, count):
    out = []
    for _ in range(count):
        data = [0] * (n * n * 4)
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.6:
                    d = int(rng.integers(8))
                    data[(u * n + v) * 4:(u * n + v) * 4 + 4] = _pykernel.Q8_TABLE[d]
                    c = _pykernel.Q8_CONJ[d]
                    data[(v * n + u) * 4:(v * n + u) * 4 + 4] = _pykernel.Q8_TABLE[c]
        out.append(data)
    return out


def workloads(rng):
    m5 = _q8_adjacency_data(rng, 5, 400)
    m7 = _q8_adjacency_data(rng, 7, 200)
    masks5, _ = _pykernel.scan_graphs(5)
    choices = rng.integers(0, 8, size=(len(masks5), 4, 10), dtype=np.uint8)
    return [
        ("qrank 5x5 Q8 x400", lambda k: [k.qrank(5, 5, d)[0] for d in m5]),
        ("qrank 7x7 Q8 x200", lambda k: [k.qrank(7, 7, d)[0] for d in m7]),
        ("q8_ranks_exhaustive K4 (8^6)", lambda k: k.q8_ranks_exhaustive(4, 0b111111, 0, 8 ** 6)),
        ("q8_ranks_choices n=5 x4 samples",
         lambda k: k.q8_ranks_choices(5, masks5, choices)),
        ("scan_graphs n=5", lambda k: k.scan_graphs(5)[0]),
    ]


def _same(a, b):
    if isinstance(a, np.ndarray):
        return np.array_equal(a, np.asarray(b))
    return a == b


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _kernel is None:
        print("compiled kernel not built; run: python setup.py build_ext --inplace")
        return 1
    rng = np.random.default_rng(args.seed)
    print(f"{'workload':36s} {'cython':>10s} {'python':>10s} {'speedup':>8s}")
    ok = True
    for name, fn in workloads(rng):
        if not _same(fn(_kernel), fn(_pykernel)):
            print(f"{name}: backends disagree")
            ok = False
            continue
        tc = min(timeit.repeat(lambda: fn(_kernel), number=1, repeat=args.repeat))
        tp = min(timeit.repeat(lambda: fn(_pykernel), number=1, repeat=args.repeat))
        print(f"{name:36s} {tc * 1e3:8.2f}ms {tp * 1e3:8.1f}ms {tp / tc:7.0f}x")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
