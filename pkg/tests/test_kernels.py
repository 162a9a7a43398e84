"""The numba and numpy kernels must agree exactly."""
import os
import subprocess
import sys

import numpy as np
import pytest

from cubecyl import kernels
from cubecyl.complex import build_complex
from cubecyl.generators import gen_grid, gen_hypercube, gen_random_dual, gen_staircase, gen_tree
from cubecyl.hyperbolicity import chain_lengths, geometry

nb = kernels.numba_backend
np_ = kernels.numpy_backend

pytestmark = pytest.mark.skipif(nb is None, reason="numba not installed")

CASES = [gen_tree(12, 4), gen_hypercube(3), gen_grid(3, 2), gen_staircase(4),
         gen_random_dual(9, 1, 0.5)]


@pytest.fixture(params=CASES, ids=lambda C: C.name)
def C(request):
    return request.param


def test_bfs(C):
    ip, ix = C.adjacency.indptr.astype(np.int64), C.adjacency.indices.astype(np.int64)
    assert np.array_equal(nb.bfs_all_pairs(ip, ix, C.n), np_.bfs_all_pairs(ip, ix, C.n))


def test_lookup_and_gates(C):
    for be in (nb, np_):
        sc, order = be.sort_codes(C.codes)
        assert np.array_equal(be.lookup_codes(sc, order, C.codes), np.arange(C.n))
    for x in (0, C.n - 1):
        a = nb.gate_table(x, C.codes, *nb.sort_codes(C.codes))
        b = np_.gate_table(x, C.codes, *np_.sort_codes(C.codes))
        assert np.array_equal(a, b)


def test_median_checks(C):
    assert nb.majority_violation(C.codes, *nb.sort_codes(C.codes))[0] == -1
    assert np_.majority_violation(C.codes, *np_.sort_codes(C.codes))[0] == -1
    assert nb.brute_median_violation(C.dist)[0] == -1
    assert np_.brute_median_violation(C.dist)[0] == -1


def test_median_violation_found_by_both():
    dist = np.array([[0, 1, 2, 2, 1], [1, 0, 1, 2, 2], [2, 1, 0, 1, 2],
                     [2, 2, 1, 0, 1], [1, 2, 2, 1, 0]], dtype=np.int32)
    assert np.array_equal(nb.brute_median_violation(dist), np_.brute_median_violation(dist))


def test_delta(C):
    assert nb.delta4_doubled(C.dist) == np_.delta4_doubled(C.dist)


def test_pair_tables_and_sweep(C):
    D = geometry(C).grid_D
    Dd = D * geometry(C).dim_d
    for x in range(0, C.n, max(1, C.n // 4)):
        gate = C.gates_from(x)
        args = (x, D, C.dist, C.side, C.transverse, C.lt, C.topo, gate)
        ta, tb = nb.pair_tables(*args), np_.pair_tables(*args)
        for a, b in zip(ta, tb):
            assert np.array_equal(a, b)
        ys = np.repeat(np.arange(C.n), C.n)
        zs = np.tile(np.arange(C.n), C.n)
        periph, _, dper, dmax, proj, cyl = ta
        for R in (0, Dd, 5 * Dd):
            ra = nb.sweep_block(x, ys, zs, C.dist, periph, dper, dmax, proj, cyl, gate, Dd, R)
            rb = np_.sweep_block(x, ys, zs, C.dist, periph, dper, dmax, proj, cyl, gate, Dd, R)
            assert np.array_equal(ra, rb)


def test_grid_scan(C):
    L = chain_lengths(C)
    a, b = np.nonzero(L > 0)
    lens = L[a, b]
    order = np.lexsort((b, a, -lens))
    args = (a[order].astype(np.int64), b[order].astype(np.int64), lens[order].astype(np.int64),
            C.transverse)
    assert tuple(nb.grid_scan(*args)) == tuple(np_.grid_scan(*args))


def test_single_vertex_complex():
    C = build_complex(1, [])
    assert C.num_hyperplanes == 0
    assert nb.delta4_doubled(C.dist) == np_.delta4_doubled(C.dist) == 0


def _backend_under(env_value):
    env = dict(os.environ)
    env.pop("CUBECYL_PURE_NUMPY", None)
    if env_value is not None:
        env["CUBECYL_PURE_NUMPY"] = env_value
    res = subprocess.run([sys.executable, "-c", "import cubecyl.kernels as k; print(k.BACKEND)"],
                         capture_output=True, text=True, env=env, check=True)
    return res.stdout.strip()


def test_env_flag_selects_backend():
    assert _backend_under("1") == "numpy"
    assert _backend_under("0") == "numba"
    assert _backend_under(None) == "numba"
