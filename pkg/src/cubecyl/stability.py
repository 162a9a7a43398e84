"""Checking the (k, R)-stability condition for the cylinders I_D.

For a triple (x, y, z) with rho = (y.z)_x, the truncations C(x, y) ∩ B(x, rho)
and C(x, z) ∩ B(x, rho) must agree outside k balls of radius R.  The balls are
centred at the median m(x, y, z) and at the projections to I(x, y) (resp.
I(x, z)) of halfspaces that are D-peripheral for one pair and not the other.
Centres are collected with the relaxed threshold d_max < rho + Dd; the distinct
projection count uses d_max < rho - Dd.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, asdict
from fractions import Fraction
from itertools import combinations
import json

import numpy as np

from . import kernels
from .cylinders import compute_pair_tables, cylinder, d_max_projection, d_peripheral
from .errors import NotAutomorphism
from .generators import Lcg
from .hyperbolicity import geometry, stability_constants
from .intervals import ball, gromov_doubled, gromov_product, interval, median, peripheral, project_set


def _frac(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class TripleReport:
    triple: tuple
    rho: Fraction
    sym_diff_size: int
    witness_centers: tuple
    cover_centers: tuple
    R_used: int
    covered: bool
    empirical_k: int

    def to_dict(self):
        d = asdict(self)
        d["triple"] = list(self.triple)
        d["rho"] = _frac(self.rho)
        d["witness_centers"] = list(self.witness_centers)
        d["cover_centers"] = list(self.cover_centers)
        return d


@dataclass
class SweepReport:
    complex_id: str
    n: int
    D: int
    d: int
    delta4: Fraction
    R: int
    mode: str
    seed: int | None = None
    count: int | None = None
    triples_checked: int = 0
    max_empirical_k: int = 0
    max_sym_diff: int = 0
    max_centers: int = 0
    max_projection_difference: int = 0
    containment_violations: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def to_dict(self):
        d = {k: v for k, v in asdict(self).items() if k != "failures"}
        d["delta4"] = _frac(self.delta4)
        d["failures"] = [f.to_dict() for f in self.failures]
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _D(C, D):
    return geometry(C).grid_D if D is None else int(D)


def _R(C, D, R):
    return 5 * D * geometry(C).dim_d if R is None else int(R)


def truncated_sym_diff(C, x, y, z, D=None):
    D = _D(C, D)
    rho2 = gromov_doubled(C, x, y, z)
    B = 2 * C.dist[x] <= rho2
    return (cylinder(C, x, y, D).vertices ^ cylinder(C, x, z, D).vertices) & B


def _difference_family(C, x, y, z, D, rho2_limit):
    """D-peripheral halfspaces of (x, y), not of (x, z), with 2*d_max < rho2_limit."""
    fam = d_peripheral(C, x, y, D) & ~d_peripheral(C, x, z, D)
    return [h for h in np.flatnonzero(fam) if 2 * d_max_projection(C, x, y, h) < rho2_limit]


def witness_centers(C, x, y, z, D=None):
    D = _D(C, D)
    Dd = D * geometry(C).dim_d
    lim = gromov_doubled(C, x, y, z) + 2 * Dd
    centers = np.zeros(C.n, dtype=bool)
    centers[median(C, x, y, z)] = True
    for a, b in ((y, z), (z, y)):
        I = interval(C, x, a)
        for h in _difference_family(C, x, a, b, D, lim):
            centers |= project_set(C, I, h)
    return centers


def projection_difference_count(C, x, y, z, D=None):
    """Distinct projections to I(x, y) of the rho - Dd truncated difference family."""
    D = _D(C, D)
    Dd = D * geometry(C).dim_d
    lim = gromov_doubled(C, x, y, z) - 2 * Dd
    I = interval(C, x, y)
    return len({project_set(C, I, h).tobytes() for h in _difference_family(C, x, y, z, D, lim)})


def peripheral_containment_holds(C, x, y, z, D=None):
    """Truncated D-peripheral set of (x, y) at rho - Dd lies in peripheral(x, z)."""
    D = _D(C, D)
    Dd = D * geometry(C).dim_d
    lim = gromov_doubled(C, x, y, z) - 2 * Dd
    near = [h for h in np.flatnonzero(d_peripheral(C, x, y, D))
            if 2 * d_max_projection(C, x, y, h) < lim]
    per = peripheral(C, x, z)
    return all(per[h] for h in near)


def greedy_cover(C, targets, centers, R):
    """Largest-coverage-first choice of R-balls; ties go to the smaller centre."""
    targets = np.flatnonzero(targets)
    centers = np.flatnonzero(centers)
    cover = C.dist[np.ix_(centers, targets)] <= R
    left = np.ones(len(targets), dtype=bool)
    chosen = []
    while left.any():
        counts = (cover & left).sum(axis=1) if len(centers) else np.zeros(0, int)
        if not len(counts) or counts.max() == 0:
            break
        c = int(np.argmax(counts))
        chosen.append(int(centers[c]))
        left &= ~cover[c]
    return chosen, not left.any()


def min_cover_size(C, targets, centers, R, limit=20):
    """Exact minimum number of R-balls (centres from ``centers``) covering ``targets``.

    Exhaustive; returns None when the target set exceeds ``limit`` or is not coverable.
    """
    targets = np.flatnonzero(targets)
    if len(targets) > limit:
        return None
    if not len(targets):
        return 0
    centers = np.flatnonzero(centers)
    masks = {int(sum(1 << i for i in np.flatnonzero(C.dist[c, targets] <= R))) for c in centers}
    masks = sorted(m for m in masks if m)
    full = (1 << len(targets)) - 1
    for k in range(1, len(masks) + 1):
        for combo in combinations(masks, k):
            acc = 0
            for m in combo:
                acc |= m
            if acc == full:
                return k
    return None


def star_holds(C, x, y, z, centers, R, D=None):
    """Evaluate the stability equation literally for balls B(c, R), c in ``centers``."""
    D = _D(C, D)
    B = ball(C, x, gromov_product(C, x, y, z))
    U = np.zeros(C.n, dtype=bool)
    for c in centers:
        U |= C.dist[c] <= R
    lhs = cylinder(C, x, y, D).vertices & B & ~U
    rhs = cylinder(C, x, z, D).vertices & B & ~U
    return bool(np.array_equal(lhs, rhs))


def check_triple(C, x, y, z, D=None, R=None):
    D = _D(C, D)
    R = _R(C, D, R)
    sd = truncated_sym_diff(C, x, y, z, D)
    centers = witness_centers(C, x, y, z, D)
    chosen, covered = greedy_cover(C, sd, centers, R)
    return TripleReport(
        triple=(int(x), int(y), int(z)),
        rho=gromov_product(C, x, y, z),
        sym_diff_size=int(sd.sum()),
        witness_centers=tuple(int(c) for c in np.flatnonzero(centers)),
        cover_centers=tuple(chosen),
        R_used=R,
        covered=covered,
        empirical_k=len(chosen),
    )


# -- sweeps ----------------------------------------------------------------------

COLUMNS = ("rho2", "sym_diff", "centers", "covered", "k", "proj_diff", "containment_ok")


def sample_triples(n, count, seed):
    rng = Lcg(seed)
    return np.array([[rng.randrange(n) for _ in range(3)] for _ in range(count)],
                    dtype=np.int64).reshape(-1, 3)


def triple_records(C, x, ys, zs, D, R, backend=None):
    """Kernel records (see ``COLUMNS``) for triples (x, ys[i], zs[i])."""
    k = backend or kernels.active
    t = compute_pair_tables(C, x, D, backend=k)
    Dd = D * geometry(C).dim_d
    return k.sweep_block(int(x), np.asarray(ys, np.int64), np.asarray(zs, np.int64), C.dist,
                         t.periph, t.dper, t.dmax, t.proj, t.cyl, t.gate, int(Dd), int(R))


def stability_sweep(C, D=None, R=None, mode="all", count=10000, seed=0, workers=1):
    """Check every (``mode="all"``) or ``count`` LCG-sampled triples.

    Results do not depend on ``workers``: triples are fixed up front and merged
    in triple order.
    """
    geo = geometry(C)
    D = _D(C, D)
    R = _R(C, D, R)
    n = C.n
    if mode == "all":
        jobs = [(x, np.repeat(np.arange(n), n), np.tile(np.arange(n), n),
                 np.arange(x * n * n, (x + 1) * n * n)) for x in range(n)]
        total = n ** 3
    elif mode == "sample":
        tri = sample_triples(n, count, seed)
        jobs = []
        for x in np.unique(tri[:, 0]):
            idx = np.flatnonzero(tri[:, 0] == x)
            jobs.append((int(x), tri[idx, 1], tri[idx, 2], idx))
        total = len(tri)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    def run(job):
        x, ys, zs, idx = job
        return x, ys, zs, idx, triple_records(C, x, ys, zs, D, R)

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(j) for j in jobs]

    report = SweepReport(
        complex_id=C.name or "", n=n, D=D, d=geo.dim_d, delta4=geo.delta4, R=R, mode=mode,
        seed=int(seed) if mode == "sample" else None,
        count=int(count) if mode == "sample" else None, triples_checked=total)
    bad = []
    for x, ys, zs, idx, rec in results:
        if not len(rec):
            continue
        report.max_empirical_k = max(report.max_empirical_k, int(rec[:, 4].max()))
        report.max_sym_diff = max(report.max_sym_diff, int(rec[:, 1].max()))
        report.max_centers = max(report.max_centers, int(rec[:, 2].max()))
        report.max_projection_difference = max(report.max_projection_difference, int(rec[:, 5].max()))
        report.containment_violations += int((rec[:, 6] == 0).sum())
        for i in np.flatnonzero(rec[:, 3] == 0):
            bad.append((int(idx[i]), x, int(ys[i]), int(zs[i])))
    bad.sort()
    report.failures = [check_triple(C, x, y, z, D, R) for _, x, y, z in bad]
    return report


def constants_for(C):
    geo = geometry(C)
    return stability_constants(max(geo.dim_d, 1), geo.delta4, geo.grid_D)


# -- invariance ------------------------------------------------------------------

def check_automorphism(C, perm):
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(C.n)):
        raise ValueError("not a permutation of the vertices")
    edges = set(C.edges)
    for u, v in C.edges:
        a, b = perm[u], perm[v]
        if (min(a, b), max(a, b)) not in edges:
            raise NotAutomorphism((u, v))
    return perm


def check_invariance(C, perm, pairs=None, D=None):
    """True iff perm(C(x, y)) = C(perm x, perm y) for the given pairs (default: all)."""
    perm = np.asarray(check_automorphism(C, perm))
    D = _D(C, D)
    if pairs is None:
        pairs = [(x, y) for x in range(C.n) for y in range(C.n)]
    tables = {}

    def cyl(x, y):
        if x not in tables:
            tables[x] = compute_pair_tables(C, x, D).cyl
        return tables[x][y]

    for x, y in pairs:
        image = np.zeros(C.n, dtype=bool)
        image[perm[np.flatnonzero(cyl(x, y))]] = True
        if not np.array_equal(image, cyl(perm[x], perm[y])):
            return False
    return True
