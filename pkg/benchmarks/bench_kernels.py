"""Time the numba kernels against the pure-numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--staircase 40] [--hypercube 6]

Each kernel runs once untimed per backend (numba compiles, or loads its
cache, on the first call), then the best of ``--repeat`` runs is reported.
Outputs of the two backends are compared for equality as a sanity check.
"""
import argparse
import time

import numpy as np

from cubecyl import kernels
from cubecyl.generators import gen_hypercube, gen_random_dual, gen_staircase
from cubecyl.hyperbolicity import chain_lengths, geometry


def best_of(fn, repeat):
    fn()
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def cases(C):
    g = geometry(C)
    D, Dd = g.grid_D, g.Dd
    ip = C.adjacency.indptr.astype(np.int64)
    ix = C.adjacency.indices.astype(np.int64)
    x = 0
    gate = C.gates_from(x)
    ys = np.repeat(np.arange(C.n), C.n)
    zs = np.tile(np.arange(C.n), C.n)
    L = chain_lengths(C)
    a, b = np.nonzero(L > 0)
    lens = L[a, b]
    order = np.lexsort((b, a, -lens))
    scan = (a[order].astype(np.int64), b[order].astype(np.int64),
            lens[order].astype(np.int64), C.transverse)

    def sweep(k):
        t = k.pair_tables(x, D, C.dist, C.side, C.transverse, C.lt, C.topo, gate)
        periph, _, dper, dmax, proj, cyl = t
        return k.sweep_block(x, ys, zs, C.dist, periph, dper, dmax, proj, cyl, gate, Dd, 5 * Dd)

    return {
        "bfs_all_pairs": lambda k: k.bfs_all_pairs(ip, ix, C.n),
        "delta4_doubled": lambda k: k.delta4_doubled(C.dist),
        "majority_violation": lambda k: k.majority_violation(C.codes, *k.sort_codes(C.codes)),
        "gate_table": lambda k: k.gate_table(x, C.codes, *k.sort_codes(C.codes)),
        "pair_tables": lambda k: k.pair_tables(x, D, C.dist, C.side, C.transverse, C.lt,
                                               C.topo, gate),
        "sweep (one x, n^2 triples)": sweep,
        "grid_scan": lambda k: k.grid_scan(*scan),
    }


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--staircase", type=int, default=40)
    p.add_argument("--hypercube", type=int, default=6)
    p.add_argument("--dual", type=int, default=12)
    args = p.parse_args()

    nb, npb = kernels.numba_backend, kernels.numpy_backend
    if nb is None:
        raise SystemExit("numba is not installed; nothing to compare")
    complexes = [gen_staircase(args.staircase), gen_hypercube(args.hypercube),
                 gen_random_dual(args.dual, 0, 0.5)]
    print(f"{'complex':<22}{'kernel':<28}{'numba s':>10}{'numpy s':>10}{'speedup':>9}  equal")
    for C in complexes:
        label = f"{C.name} n={C.n}"
        for name, run in cases(C).items():
            t_nb, out_nb = best_of(lambda: run(nb), args.repeat)
            t_np, out_np = best_of(lambda: run(npb), args.repeat)
            print(f"{label:<22}{name:<28}{t_nb:>10.4f}{t_np:>10.4f}"
                  f"{t_np / max(t_nb, 1e-9):>8.1f}x  {same(out_nb, out_np)}")


if __name__ == "__main__":
    main()
