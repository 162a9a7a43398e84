"""Finite CAT(0) cube complexes given by their 1-skeleton (a median graph).

A complex is built once, validated, and then treated as immutable.  Vertices
are ``0..n-1``.  Hyperplane ``j`` owns halfspaces ``2j`` and ``2j + 1``; the
complement of halfspace ``h`` is ``h ^ 1`` and its hyperplane is ``h >> 1``.
Halfspace ``2j`` is the side containing the smaller endpoint of the first
(lexicographically) edge of the class.

Sets of vertices and sets of halfspaces are boolean numpy arrays.  Each vertex
also carries a packed sign vector (``codes``), one bit per hyperplane, which
makes gate and median lookups a binary search.
"""
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from . import kernels
from .errors import Disconnected, MalformedEdge, NotMedian, SeparationFailure


@dataclass(frozen=True)
class Hyperplane:
    id: int
    edge_class: tuple
    sides: tuple


@dataclass(frozen=True, eq=False)
class Halfspace:
    id: int
    vertices: np.ndarray
    complement_id: int
    hyperplane_id: int


@dataclass(frozen=True, eq=False)
class PocsetRelations:
    """``leq[h, k]`` iff h ⊆ k; ``transverse[i, j]`` iff hyperplanes i and j cross."""

    leq: np.ndarray
    transverse: np.ndarray

    @property
    def lt(self):
        return self.leq & ~np.eye(self.leq.shape[0], dtype=bool)


def _readonly(a):
    a.setflags(write=False)
    return a


def _canonical_edges(n, edges):
    if n < 1:
        raise ValueError("a complex needs at least one vertex")
    seen = set()
    out = []
    for e in edges:
        if len(e) != 2:
            raise MalformedEdge(e, "an edge has exactly two endpoints")
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedEdge(e, f"endpoint outside 0..{n - 1}")
        if u == v:
            raise MalformedEdge(e, "loop")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise MalformedEdge(e, "duplicate edge")
        seen.add(key)
        out.append(key)
    out.sort()
    return tuple(out)


def _csr(n, edges):
    if edges:
        e = np.asarray(edges, dtype=np.int64)
        rows = np.concatenate([e[:, 0], e[:, 1]])
        cols = np.concatenate([e[:, 1], e[:, 0]])
    else:
        rows = cols = np.zeros(0, dtype=np.int64)
    adj = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    adj.sort_indices()
    return adj


def _pack(side):
    n, nh = side.shape
    nw = (nh + 63) // 64
    codes = np.zeros((n, nw), dtype=np.uint64)
    for j in range(nh):
        codes[:, j >> 6] |= side[:, j].astype(np.uint64) << np.uint64(j & 63)
    return codes


def _median_witness(dist):
    found = kernels.brute_median_violation(dist)
    return NotMedian(found[:3], found[3]) if found[0] >= 0 else None


class CubeComplex:
    """A validated median graph with its hyperplanes and pocset relations."""

    def __init__(self, n, edges, *, name=None, labels=None, automorphisms=()):
        self.n = int(n)
        self.edges = _canonical_edges(self.n, edges)
        self.name = name
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must have one entry per vertex")
        self.automorphisms = tuple(tuple(int(v) for v in p) for p in automorphisms)

        self.adjacency = _csr(self.n, self.edges)
        dist = kernels.bfs_all_pairs(
            self.adjacency.indptr.astype(np.int64), self.adjacency.indices.astype(np.int64), self.n)
        if (dist < 0).any():
            u, v = np.argwhere(dist < 0)[0]
            raise Disconnected(int(u), int(v))
        self.dist = _readonly(dist)

        self._classify_edges()
        self._check_median()
        self._build_relations()
        self._gates = {}
        self._cache = {}

    # -- construction ------------------------------------------------------

    def _classify_edges(self):
        n, dist = self.n, self.dist
        edges = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        m = len(edges)
        label = np.full(m, -1, dtype=np.int64)
        sides = []
        if m and ((dist[0, edges[:, 0]] - dist[0, edges[:, 1]]) % 2 == 0).any():
            # odd cycle: no bipartition, certainly not median
            raise _median_witness(dist) or SeparationFailure(None, 0)
        for e in range(m):
            if label[e] >= 0:
                continue
            u, v = edges[e]
            near_u = dist[:, u] < dist[:, v]
            cut = near_u[edges[:, 0]] != near_u[edges[:, 1]]
            if (label[cut] >= 0).any():
                raise _median_witness(dist) or SeparationFailure(len(sides), 0)
            label[cut] = len(sides)
            sides.append(~near_u)
        side = np.stack(sides, axis=1).astype(np.uint8) if sides else np.zeros((n, 0), np.uint8)

        # wall metric must reproduce the graph metric (isometric cube embedding)
        for s in range(n):
            if not np.array_equal((side != side[s]).sum(axis=1), dist[s]):
                raise _median_witness(dist) or SeparationFailure(None, 0)

        self.edge_class = _readonly(label)
        self.side = _readonly(side)
        self.codes = _readonly(_pack(side))
        sc, order = kernels.sort_codes(self.codes)
        self.sorted_codes = _readonly(sc)
        self.code_order = _readonly(order)

        member = np.empty((2 * side.shape[1], n), dtype=bool)
        member[0::2] = (side == 0).T
        member[1::2] = (side == 1).T
        self.member = _readonly(member)

        for j in range(self.num_hyperplanes):
            keep = edges[label != j]
            sub = csr_matrix((np.ones(len(keep)), (keep[:, 0], keep[:, 1])), shape=(n, n))
            ncomp, comp = connected_components(sub, directed=False)
            if ncomp != 2 or not np.array_equal(comp == comp[np.argmax(member[2 * j])], member[2 * j]):
                raise SeparationFailure(j, ncomp)

    def _check_median(self):
        bad = kernels.majority_violation(self.codes, self.sorted_codes, self.code_order)
        if bad[0] >= 0:
            x, y, z = (int(t) for t in bad)
            d = self.dist
            count = int(((d[x] + d[y] == d[x, y]) & (d[x] + d[z] == d[x, z])
                         & (d[y] + d[z] == d[y, z])).sum())
            raise NotMedian((x, y, z), count)

    def _build_relations(self):
        mem = self.member.astype(np.int32)
        inter = mem @ mem.T
        sizes = mem.sum(axis=1)
        leq = inter == sizes[:, None]
        nh = self.num_hyperplanes
        nonempty = inter > 0
        q = nonempty.reshape(nh, 2, nh, 2)
        transverse = q[:, 0, :, 0] & q[:, 0, :, 1] & q[:, 1, :, 0] & q[:, 1, :, 1]
        self.relations = PocsetRelations(_readonly(leq), _readonly(transverse))
        self.lt = _readonly(self.relations.lt)
        self.halfspace_sizes = _readonly(sizes)
        self.topo = _readonly(np.argsort(sizes, kind="stable").astype(np.int64))

    # -- accessors ---------------------------------------------------------

    @property
    def num_hyperplanes(self):
        return self.side.shape[1]

    @property
    def num_halfspaces(self):
        return 2 * self.side.shape[1]

    @property
    def transverse(self):
        return self.relations.transverse

    @property
    def hyperplanes(self):
        return [Hyperplane(j, tuple(self.edges[e] for e in np.flatnonzero(self.edge_class == j)),
                           (2 * j, 2 * j + 1)) for j in range(self.num_hyperplanes)]

    @property
    def halfspaces(self):
        return [self.halfspace(h) for h in range(self.num_halfspaces)]

    def halfspace(self, h):
        return Halfspace(h, self.member[h], h ^ 1, h >> 1)

    def halfspace_of(self, v, j):
        """The halfspace of hyperplane ``j`` containing vertex ``v``."""
        return 2 * j + int(self.side[v, j])

    def vertex_with_code(self, code):
        """Vertex whose packed sign vector is ``code``, or -1."""
        q = np.ascontiguousarray(np.atleast_2d(code), dtype=np.uint64)
        return int(kernels.lookup_codes(self.sorted_codes, self.code_order, q)[0])

    def gates_from(self, x):
        """``g[y, v]``: nearest-point projection of v onto I(x, y), for all y, v."""
        g = self._gates.get(x)
        if g is None:
            g = _readonly(kernels.gate_table(x, self.codes, self.sorted_codes, self.code_order))
            self._gates[x] = g
        return g

    def index(self, label):
        """Vertex id of a label (e.g. a grid coordinate); ints pass through."""
        if self.labels is not None and label in self.labels:
            return self.labels.index(label)
        return int(label)

    def __repr__(self):
        nm = f" {self.name!r}" if self.name else ""
        return (f"<CubeComplex{nm} n={self.n} edges={len(self.edges)} "
                f"hyperplanes={self.num_hyperplanes}>")


def build_complex(n, edges, **kwargs):
    """Build and validate a complex; raises on malformed, disconnected or non-median input."""
    return CubeComplex(n, edges, **kwargs)


def hyperplane_classes(C):
    return C.hyperplanes


def relations(C):
    return C.relations
