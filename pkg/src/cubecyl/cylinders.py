"""Intersection numbers, D-peripheral halfspaces and the cylinders I_D(x, y)."""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import kernels
from .hyperbolicity import geometry
from .intervals import interval_by_metric, outside_all, peripheral, separating


@dataclass(frozen=True, eq=False)
class Cylinder:
    x: int
    y: int
    D: int
    vertices: np.ndarray
    defining_set: np.ndarray

    def members(self):
        return np.flatnonzero(self.vertices)


def _default_D(C, D):
    return geometry(C).grid_D if D is None else int(D)


def intersection_number(C, h, K):
    """Longest pencil inside the halfspace mask ``K`` whose hyperplanes all cross ĥ."""
    cand = [k for k in C.topo if K[k] and C.transverse[h >> 1, k >> 1]]
    lens = {}
    for a, k in enumerate(cand):
        lens[k] = 1 + max((lens[j] for j in cand[:a] if C.lt[j, k]), default=0)
    return max(lens.values(), default=0)


def intersection_numbers(C, x, y):
    """``i(h, separating(x, y))`` for every peripheral h; -1 elsewhere."""
    sep = separating(C, x, y)
    out = np.full(C.num_halfspaces, -1, dtype=np.int64)
    for h in np.flatnonzero(peripheral(C, x, y)):
        out[h] = intersection_number(C, h, sep)
    return out


def d_peripheral(C, x, y, D=None):
    D = _default_D(C, D)
    inter = intersection_numbers(C, x, y)
    return (inter >= 0) & (inter <= D)


def cylinder(C, x, y, D=None):
    """C(x, y) = I_D(x, y), the vertices outside every D-peripheral halfspace."""
    D = _default_D(C, D)
    defining = d_peripheral(C, x, y, D)
    verts = outside_all(C, defining)
    verts.setflags(write=False)
    defining.setflags(write=False)
    return Cylinder(x, y, D, verts, defining)


def d_max_projection(C, x, y, h):
    """Largest distance from x to the projection of h onto I(x, y)."""
    g = C.gates_from(x)[y][C.member[h]]
    return int(C.dist[x, g].max())


def d_peripheral_truncated(C, x, y, D=None, rho=0):
    """D-peripheral halfspaces whose projection lies strictly within ``rho`` of x."""
    D = _default_D(C, D)
    rho = Fraction(rho)
    out = d_peripheral(C, x, y, D)
    for h in np.flatnonzero(out):
        out[h] = d_max_projection(C, x, y, h) < rho
    return out


def neighborhood(C, vertices, radius):
    idx = np.flatnonzero(vertices)
    return C.dist[:, idx].min(axis=1) <= radius


# -- batched tables --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class PairTables:
    """Everything about the pairs (x, y), y ranging over all vertices.

    Rows are indexed by y; halfspace columns by halfspace id.
    """

    x: int
    D: int
    periph: np.ndarray
    inter: np.ndarray
    dper: np.ndarray
    dmax: np.ndarray
    proj: np.ndarray
    cyl: np.ndarray
    gate: np.ndarray


def compute_pair_tables(C, x, D, backend=None):
    k = backend or kernels.active
    gate = C.gates_from(x)
    out = k.pair_tables(int(x), int(D), C.dist, C.side, C.transverse, C.lt, C.topo, gate)
    for a in out:
        a.setflags(write=False)
    return PairTables(int(x), int(D), *out, gate)


@lru_cache(maxsize=4)
def pair_tables(C, x, D):
    return compute_pair_tables(C, x, D)


def all_cylinders(C, D=None):
    """``cyl[x, y]``: vertex mask of C(x, y) for all pairs."""
    D = _default_D(C, D)
    return np.stack([compute_pair_tables(C, x, D).cyl for x in range(C.n)])


def interval_masks(C):
    return np.stack([np.stack([interval_by_metric(C, x, y) for y in range(C.n)])
                     for x in range(C.n)])
