"""Separating and peripheral halfspaces, intervals, gates, medians.

Half-integer quantities (Gromov products, ball radii) are carried as doubled
integers internally and exposed as :class:`fractions.Fraction`.
"""
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ChainCountExceeded


@dataclass(frozen=True, eq=False)
class HalfspaceSets:
    separating: np.ndarray
    peripheral: np.ndarray


@dataclass(frozen=True, eq=False)
class Interval:
    x: int
    y: int
    vertices: np.ndarray
    gate: np.ndarray

    def __contains__(self, v):
        return bool(self.vertices[v])

    def members(self):
        return np.flatnonzero(self.vertices)


def separating(C, x, y):
    """Halfspaces h with x ∉ h ∋ y, as a mask over halfspace ids."""
    out = np.zeros(C.num_halfspaces, dtype=bool)
    js = np.flatnonzero(C.side[x] != C.side[y])
    out[2 * js + C.side[y, js]] = True
    return out


def peripheral(C, x, y):
    """Halfspaces h with x, y ∈ h*."""
    out = np.zeros(C.num_halfspaces, dtype=bool)
    js = np.flatnonzero(C.side[x] == C.side[y])
    out[2 * js + 1 - C.side[x, js]] = True
    return out


def halfspace_sets(C, x, y):
    return HalfspaceSets(separating(C, x, y), peripheral(C, x, y))


def complement(mask):
    """Image of a halfspace mask under h -> h*."""
    out = np.empty_like(mask)
    out[0::2] = mask[1::2]
    out[1::2] = mask[0::2]
    return out


def outside_all(C, hmask):
    """Vertices lying in h* for every h in ``hmask``."""
    if not hmask.any():
        return np.ones(C.n, dtype=bool)
    return ~C.member[hmask].any(axis=0)


def interval_by_metric(C, x, y):
    d = C.dist
    return d[x] + d[y] == d[x, y]


def interval(C, x, y):
    verts = interval_by_metric(C, x, y)
    by_halfspaces = outside_all(C, peripheral(C, x, y))
    if not np.array_equal(verts, by_halfspaces):
        raise RuntimeError(f"interval definitions disagree for ({x}, {y})")
    verts.setflags(write=False)
    return Interval(x, y, verts, C.gates_from(x)[y])


def project(C, I, v):
    return int(I.gate[v])


def nearest_point(C, vertices, v):
    """Closest vertex of ``vertices`` to ``v`` by direct search; must be unique."""
    idx = np.flatnonzero(vertices)
    d = C.dist[v, idx]
    best = idx[d == d.min()]
    if len(best) != 1:
        raise RuntimeError(f"nearest point to {v} is not unique: {best.tolist()}")
    return int(best[0])


def project_set(C, I, h):
    """Vertex mask of the projection of halfspace ``h`` onto ``I``."""
    out = np.zeros(C.n, dtype=bool)
    out[I.gate[C.member[h]]] = True
    return out


def median(C, x, y, z):
    d = C.dist
    triple = ((d[x] + d[y] == d[x, y]) & (d[y] + d[z] == d[y, z])
              & (d[x] + d[z] == d[x, z]))
    m = np.flatnonzero(triple)
    g = int(C.gates_from(x)[y, z])
    if len(m) != 1 or m[0] != g:
        raise RuntimeError(f"median of ({x}, {y}, {z}) inconsistent: {m.tolist()} vs gate {g}")
    return g


def gromov_doubled(C, x, y, z):
    d = C.dist
    return int(d[x, y]) + int(d[x, z]) - int(d[y, z])


def gromov_product(C, x, y, z):
    """(y.z)_x as an exact half-integer."""
    return Fraction(gromov_doubled(C, x, y, z), 2)


def ball(C, center, radius):
    """Closed ball; ``radius`` may be a Fraction or int."""
    r = Fraction(radius)
    return 2 * C.dist[center] * r.denominator <= 2 * r.numerator


def diameter(C, vertices):
    idx = np.flatnonzero(vertices)
    if not len(idx):
        return 0
    return int(C.dist[np.ix_(idx, idx)].max())


def bfs_geodesic(C, x, y):
    """The geodesic from x to y that always steps to the smallest-id neighbour."""
    path = [x]
    indptr, indices = C.adjacency.indptr, C.adjacency.indices
    u = x
    while u != y:
        nb = indices[indptr[u]:indptr[u + 1]]
        u = int(nb[C.dist[y, nb] < C.dist[y, u]].min())
        path.append(u)
    return path


def interval_thinness(C, x, y, geodesic=None):
    """Largest distance from a vertex of I(x, y) to a chosen x-y geodesic."""
    g = bfs_geodesic(C, x, y) if geodesic is None else geodesic
    I = interval_by_metric(C, x, y)
    return int(C.dist[np.ix_(np.flatnonzero(I), g)].min(axis=1).max())


# -- interval embedding --------------------------------------------------------

def _min_chain_cover(items, lt):
    """Minimum chain partition of a strict order via bipartite matching.

    ``items`` are halfspace ids; augmenting paths are tried in id order so the
    result is deterministic.
    """
    items = sorted(items)
    k = len(items)
    succ = [[b for b in range(k) if lt[items[a], items[b]]] for a in range(k)]
    match_right = [-1] * k
    match_left = [-1] * k

    def augment(a, seen):
        for b in succ[a]:
            if seen[b]:
                continue
            seen[b] = True
            if match_right[b] < 0 or augment(match_right[b], seen):
                match_right[b] = a
                match_left[a] = b
                return True
        return False

    for a in range(k):
        augment(a, [False] * k)
    chains = []
    for a in range(k):
        if match_right[a] >= 0:
            continue
        chain = [items[a]]
        b = match_left[a]
        while b >= 0:
            chain.append(items[b])
            b = match_left[b]
        chains.append(chain)
    return chains


def interval_chains(C, x, y):
    """Chain decomposition of the separating halfspaces of (x, y), smallest-first."""
    return _min_chain_cover(np.flatnonzero(separating(C, x, y)).tolist(), C.lt)


def embed_interval(C, x, y, d=None):
    """Map each vertex of I(x, y) to integer coordinates, one axis per chain.

    Returns ``(coords, chains)`` with ``coords`` a dict vertex -> tuple.
    Raises :class:`ChainCountExceeded` if more than ``d`` chains are needed.
    """
    chains = interval_chains(C, x, y)
    if d is not None and len(chains) > d:
        raise ChainCountExceeded(len(chains), d)
    verts = np.flatnonzero(interval_by_metric(C, x, y))
    coords = {}
    for v in verts:
        coords[int(v)] = tuple(int(C.member[ch, v].sum()) for ch in chains)
    return coords, chains
