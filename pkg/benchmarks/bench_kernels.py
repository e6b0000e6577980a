"""Timing comparison of the compiled kernels against their Python twins.

Usage: python benchmarks/bench_kernels.py [--sizes 500,2000,5000] [--repeat 3]

Instances are seeded Apollonian triangulations under their reduction
ordering, the same workload the radius-4 audit runs.  Each cell is the
best of --repeat runs, in milliseconds.
"""

import argparse
import importlib
import time

from sgcol.families import gen_apollonian
from sgcol.planar import build_reduction, reduction_ordering

KERNELS = ("bfs_all_dists", "exact_distance_pairs", "wreach_all", "dreach_all")


def load_backends():
    backends = [("pure", importlib.import_module("sgcol._kernels.pure"))]
    try:
        backends.append(("cext", importlib.import_module("sgcol._kernels._cext")))
    except ImportError:
        pass
    return backends


def build_instance(n):
    t = gen_apollonian(max(n - 4, 0), seed=n)
    g = t.graph()
    pos = reduction_ordering(build_reduction(t)).pos_array()
    indptr, nbr = g.csr()[:2]
    return t.n, indptr, nbr, pos


def run_kernel(mod, name, indptr, nbr, pos):
    if name == "bfs_all_dists":
        return lambda: mod.bfs_all_dists(indptr, nbr, 0)
    if name == "exact_distance_pairs":
        return lambda: mod.exact_distance_pairs(indptr, nbr, None, 4, 0)
    if name == "wreach_all":
        return lambda: mod.wreach_all(indptr, nbr, pos, 4)
    return lambda: mod.dreach_all(indptr, nbr, pos, 4, 10_000_000)


def best_ms(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append((time.perf_counter() - t0) * 1000)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="500,2000,5000")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    backends = load_backends()
    if len(backends) == 1:
        print("note: compiled extension not importable, timing pure only")
    header = ["kernel", "n"] + [name for name, _ in backends]
    if len(backends) == 2:
        header.append("speedup")
    rows = []
    for n in sizes:
        n_actual, indptr, nbr, pos = build_instance(n)
        for kernel in KERNELS:
            row = [kernel, str(n_actual)]
            cells = []
            for _, mod in backends:
                ms = best_ms(run_kernel(mod, kernel, indptr, nbr, pos),
                             args.repeat)
                cells.append(ms)
                row.append(f"{ms:9.2f}ms")
            if len(cells) == 2 and cells[1] > 0:
                row.append(f"{cells[0] / cells[1]:6.1f}x")
            rows.append(row)
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    for r in [header] + rows:
        print("  ".join(c.rjust(w) for c, w in zip(r, widths)))


if __name__ == "__main__":
    main()
