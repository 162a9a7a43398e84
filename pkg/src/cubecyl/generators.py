"""Deterministic test complexes.

Randomness comes from :class:`Lcg`, a 64-bit linear congruential generator
(multiplier 6364136223846793005, increment 1442695040888963407, output the top
31 bits) so that outputs are identical on every platform and numpy version.
"""
from dataclasses import dataclass, field
from itertools import product
import heapq

import numpy as np

from .complex import build_complex
from .errors import InconsistentSpec, TooManyPairs

MAX_POCSET_PAIRS = 20


class Lcg:
    MULT = 6364136223846793005
    INC = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed):
        self.state = (int(seed) * 0x9E3779B97F4A7C15 + self.INC) & self.MASK

    def next(self):
        self.state = (self.state * self.MULT + self.INC) & self.MASK
        return self.state >> 33

    def randrange(self, k):
        return self.next() % k

    def random(self):
        return self.next() / float(1 << 31)


def gen_tree(n, seed=0):
    """Random labelled tree on n vertices from an LCG-drawn Prüfer sequence."""
    if n < 1:
        raise ValueError("n >= 1")
    if n == 1:
        return build_complex(1, [], name="tree(1)")
    rng = Lcg(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    edges.append(tuple(heapq.nsmallest(2, leaves)))
    return build_complex(n, edges, name=f"tree({n},seed={seed})")


def gen_path(n):
    """Path with vertices 0..n (n edges)."""
    return build_complex(n + 1, [(i, i + 1) for i in range(n)], name=f"path({n})")


def _from_labels(labels, adjacent, name, autos=()):
    index = {lab: i for i, lab in enumerate(labels)}
    edges = [(index[a], index[b]) for a in labels for b in labels
             if index[a] < index[b] and adjacent(a, b)]
    perms = [[index[f(lab)] for lab in labels] for f in autos]
    return build_complex(len(labels), edges, name=name, labels=labels, automorphisms=perms)


def _l1_unit(a, b):
    return sum(abs(p - q) for p, q in zip(a, b)) == 1


def gen_hypercube(d):
    if not 1 <= d <= 12:
        raise ValueError("1 <= d <= 12")
    labels = list(product((0, 1), repeat=d))
    autos = [lambda v: v[1:] + v[:1], lambda v: (1 - v[0],) + v[1:]]
    return _from_labels(labels, _l1_unit, f"hypercube({d})", autos)


def gen_grid(m, n):
    """(m+1) x (n+1) vertex grid; labels are (i, j)."""
    if m < 1 or n < 1:
        raise ValueError("m, n >= 1")
    labels = [(i, j) for i in range(m + 1) for j in range(n + 1)]
    autos = [lambda v: (m - v[0], v[1]), lambda v: (v[0], n - v[1])]
    if m == n:
        autos.append(lambda v: (v[1], m - v[0]))
    return _from_labels(labels, _l1_unit, f"grid({m},{n})", autos)


def gen_staircase(n):
    """Vertices (i, j) in [0, n]^2 with |i - j| <= 1, unit-distance edges."""
    if n < 1:
        raise ValueError("n >= 1")
    labels = [(i, j) for i in range(n + 1) for j in range(n + 1) if abs(i - j) <= 1]
    autos = [lambda v: (v[1], v[0]), lambda v: (n - v[0], n - v[1])]
    return _from_labels(labels, _l1_unit, f"staircase({n})", autos)


# -- Sageev duals -------------------------------------------------------------

@dataclass(frozen=True)
class PocsetSpec:
    """A finite pocset on ``pairs`` complementary pairs.

    Literal ``2 * i`` is one side of pair i and ``2 * i + 1`` its complement.
    ``order`` lists relations ``(a, b)`` meaning a <= b.
    """

    pairs: int
    order: tuple = field(default_factory=tuple)
    base: tuple | None = None


def _closure(spec):
    k = 2 * spec.pairs
    rel = np.eye(k, dtype=bool)
    for a, b in spec.order:
        if not (0 <= a < k and 0 <= b < k):
            raise InconsistentSpec(f"literal out of range in {a} <= {b}")
        rel[a, b] = True
        rel[b ^ 1, a ^ 1] = True
    for m in range(k):
        rel |= rel[:, m][:, None] & rel[m][None, :]
    lits = np.arange(k)
    if rel[lits, lits ^ 1].any():
        a = int(np.flatnonzero(rel[lits, lits ^ 1])[0])
        raise InconsistentSpec(f"literal {a} is forced below its complement")
    both = rel & rel.T & ~np.eye(k, dtype=bool)
    if both.any():
        a, b = np.argwhere(both)[0]
        raise InconsistentSpec(f"literals {a} and {b} are forced equal")
    return rel


def consistent_orientations(spec):
    """All choices of one literal per pair closed upward under the order."""
    rel = _closure(spec)
    P = spec.pairs
    up = [np.flatnonzero(rel[a]) for a in range(2 * P)]
    out = []
    chosen = [-1] * P

    def ok(lit):
        for b in up[lit]:
            p = b >> 1
            if chosen[p] >= 0 and chosen[p] != (b & 1):
                return False
        return True

    def rec(i):
        if i == P:
            out.append(tuple(chosen))
            return
        for s in (0, 1):
            if ok(2 * i + s):
                chosen[i] = s
                rec(i + 1)
                chosen[i] = -1

    rec(0)
    return out


def sageev_dual(spec, name=None):
    """Cube complex whose vertices are the consistent orientations of ``spec``."""
    if spec.pairs > MAX_POCSET_PAIRS:
        raise TooManyPairs(f"{spec.pairs} pairs exceeds {MAX_POCSET_PAIRS}")
    verts = consistent_orientations(spec)
    index = {v: i for i, v in enumerate(verts)}
    edges = []
    for v, i in index.items():
        for p in range(spec.pairs):
            w = v[:p] + (1 - v[p],) + v[p + 1:]
            j = index.get(w)
            if j is not None and i < j:
                edges.append((i, j))
    return build_complex(len(verts), edges, name=name or f"dual({spec.pairs})", labels=verts)


def pocset_of(C):
    """The halfspace pocset of ``C``: literal h is halfspace h."""
    lt = np.argwhere(C.lt)
    return PocsetSpec(C.num_hyperplanes, tuple((int(a), int(b)) for a, b in lt))


def random_pocset(pairs, seed=0, nest_prob=0.7):
    """Random consistent pocset: relations between pairs are added greedily."""
    rng = Lcg(seed)
    order = []
    for i in range(pairs):
        for j in range(i + 1, pairs):
            if rng.random() >= nest_prob:
                continue
            rel = (2 * i + rng.randrange(2), 2 * j + rng.randrange(2))
            if rng.randrange(2):
                rel = rel[::-1]
            trial = PocsetSpec(pairs, tuple(order + [rel]))
            try:
                _closure(trial)
            except InconsistentSpec:
                continue
            order.append(rel)
    return PocsetSpec(pairs, tuple(order))


def gen_random_dual(pairs, seed=0, nest_prob=0.7):
    spec = random_pocset(pairs, seed, nest_prob)
    return sageev_dual(spec, name=f"dual({pairs},seed={seed})")
