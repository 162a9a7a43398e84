"""Hyperbolicity constant, dimension and maximal grid size of a complex."""
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels


@dataclass(frozen=True)
class Grid:
    pencil_a: tuple
    pencil_b: tuple

    @property
    def size(self):
        return len(self.pencil_a)


@dataclass(frozen=True)
class GeometryConstants:
    delta4: Fraction
    dim_d: int
    grid_D: int

    @property
    def Dd(self):
        return self.grid_D * self.dim_d

    @property
    def theta(self):
        return self.Dd + self.delta4

    @property
    def R(self):
        return 5 * self.Dd


def delta_four_point(C):
    """Four-point hyperbolicity constant as an exact half-integer."""
    if C.n < 4:
        return Fraction(0)
    return Fraction(int(kernels.delta4_doubled(C.dist)), 2)


def _popcount(x):
    return bin(x).count("1")


def max_clique_size(adj):
    """Largest clique of a graph given as a list of neighbour bitmasks.

    Bron-Kerbosch with pivoting, outer loop in degeneracy order.
    """
    k = len(adj)
    if k == 0:
        return 0
    order, removed = [], 0
    for _ in range(k):
        v = min((u for u in range(k) if not removed >> u & 1),
                key=lambda u: _popcount(adj[u] & ~removed))
        order.append(v)
        removed |= 1 << v
    best = 1

    def expand(size, P, X):
        nonlocal best
        if not P:
            if not X and size > best:
                best = size
            return
        if size + _popcount(P) <= best:
            return
        PX = P | X
        pivot, pc = -1, -1
        while PX:
            u = (PX & -PX).bit_length() - 1
            PX &= PX - 1
            c = _popcount(P & adj[u])
            if c > pc:
                pivot, pc = u, c
        cand = P & ~adj[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            expand(size + 1, P & adj[v], X & adj[v])
            P &= ~(1 << v)
            X |= 1 << v

    done = 0
    for v in order:
        later = adj[v] & ~done
        expand(1, later, adj[v] & done)
        done |= 1 << v
    return best


def dimension(C):
    """Size of the largest family of pairwise transverse hyperplanes."""
    T = C.transverse
    adj = [sum(1 << int(j) for j in np.flatnonzero(T[i])) for i in range(T.shape[0])]
    return max_clique_size(adj)


def chain_lengths(C):
    """``L[a, b]``: number of halfspaces in a longest chain from a up to b.

    1 on the diagonal, 0 where a is not below b.
    """
    lt = C.lt
    nhs = lt.shape[0]
    L = np.eye(nhs, dtype=np.int64)
    for b in C.topo:
        below = np.flatnonzero(lt[:, b])
        if not below.size:
            continue
        # a < j < b, j processed before b (smaller halfspace)
        L[below, b] = 2
        for j in below:
            mid = below[lt[below, j]]
            if mid.size:
                L[mid, b] = np.maximum(L[mid, b], L[mid, j] + 1)
    return L


def _chain_between(C, L, a, b):
    chain, cur = [int(a)], int(a)
    while cur != b:
        nxt = [j for j in np.flatnonzero(C.lt[cur])
               if (j == b or C.lt[j, b]) and L[j, b] == L[cur, b] - 1]
        cur = int(min(nxt))
        chain.append(cur)
    return chain


def max_grid_size(C):
    """Largest m such that two pencils of m hyperplanes cross pairwise.

    A hyperplane crossing both ends of a pencil crosses every member, so it is
    enough to test endpoint pairs of longest chains.
    """
    if not C.transverse.any():
        return 0, None
    L = chain_lengths(C)
    a, b = np.nonzero(L > 0)
    lens = L[a, b]
    order = np.lexsort((b, a, -lens))
    ea, eb, el = a[order].astype(np.int64), b[order].astype(np.int64), lens[order].astype(np.int64)
    best, i, j = kernels.grid_scan(ea, eb, el, C.transverse)
    best = int(best)
    pa = _chain_between(C, L, ea[i], eb[i])[:best]
    pb = _chain_between(C, L, ea[j], eb[j])[:best]
    return best, Grid(tuple(pa), tuple(pb))


def is_grid(C, grid):
    T = C.transverse
    nested = all(C.lt[p[t], p[t + 1]] for p in (grid.pencil_a, grid.pencil_b)
                 for t in range(len(p) - 1))
    return nested and all(T[h >> 1, k >> 1] for h in grid.pencil_a for k in grid.pencil_b)


def geometry(C):
    """δ, d and D of ``C``, cached on the complex."""
    g = C._cache.get("geometry")
    if g is None:
        g = GeometryConstants(delta_four_point(C), dimension(C), max_grid_size(C)[0])
        C._cache["geometry"] = g
    return g


# -- constants from the existence argument ------------------------------------

T_MAX_ITERATIONS = 11


def N2(m, d):
    """Sequence length forcing a monotone or constant subsequence of length m."""
    return d * m ** 3


def N1(m, R, d, K):
    """Count forcing m subcomplexes of diameter <= R separated by a pencil."""
    return m * (R + 1) ** 2 * d * K


@dataclass(frozen=True)
class StabilityConstants:
    """Exact integers; ``K`` and ``M`` are upper bounds written as coeff * 2**exp."""

    d: int
    D: int
    delta: Fraction
    L: int
    T: int | None
    K_exponent: int
    R: int
    theta: Fraction

    @property
    def M_coefficient(self):
        """M = M_coefficient * 2**K_exponent."""
        if self.T is None:
            return None
        return self.T * (self.D * self.d + 1) ** 2 * self.d

    def M_bounds(self, count):
        """Exact test of ``count <= M``."""
        coeff = self.M_coefficient
        if coeff is None:
            # T was not expanded; it already exceeds 10**1000 here
            return count.bit_length() < 3000
        return -((-count) >> self.K_exponent) <= coeff

    def N2(self, m):
        return N2(m, self.d)


def stability_constants(d, delta, D):
    """Constants of the stability argument for dimension d, delta, grid size D.

    T is the (D+1)-fold iterate of N2 starting at L = 2D + 2; it is left as
    None beyond ``T_MAX_ITERATIONS`` iterations, where it has millions of digits.
    """
    if d < 1 or D < 0 or delta < 0:
        raise ValueError("need d >= 1, D >= 0, delta >= 0")
    L = 2 * D + 2
    T = None
    if D + 1 <= T_MAX_ITERATIONS:
        T = L
        for _ in range(D + 1):
            T = N2(T, d)
    Dd = D * d
    return StabilityConstants(d=d, D=D, delta=Fraction(delta), L=L, T=T,
                          K_exponent=(2 * Dd + 1) ** d, R=5 * Dd,
                          theta=Dd + Fraction(delta))
